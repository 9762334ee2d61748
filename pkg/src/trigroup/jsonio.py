"""JSON encoding of scalars, matrices, lattices and group presentations.

Exact scalars are strings "a/b+c/di" with rational components; the
imaginary part is omitted when zero so that parse . print is the identity.
Float scalars are two-element arrays [re, im] printed with 17 significant
digits for byte-reproducible output.
"""

from __future__ import annotations

import json
import re as _re
from fractions import Fraction

from .matrix import ProjMatrix
from .scalar import GaussianRational


class ParseError(ValueError):
    """Malformed JSON input."""


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _float_repr(x: float) -> float:
    # round-trips through repr; '%.17g' keeps full double precision
    return float(format(float(x), ".17g"))


def scalar_to_json(v):
    if isinstance(v, GaussianRational):
        if v.im == 0:
            return _frac_str(v.re)
        mag = abs(v.im)
        im = ("" if mag == 1 else _frac_str(mag)) + "i"
        sign = "+" if v.im > 0 else "-"
        if v.re == 0:
            return f"{sign}{im}" if sign == "-" else im
        return f"{_frac_str(v.re)}{sign}{im}"
    if isinstance(v, (int, Fraction)):
        return scalar_to_json(GaussianRational(Fraction(v)))
    c = complex(v)
    return [_float_repr(c.real), _float_repr(c.imag)]


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = _re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?=\s*(?:[+-]|$)))?\s*(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\s*i)?\s*$"
)


def scalar_from_json(s):
    if isinstance(s, str):
        m = _SCALAR_RE.match(s)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ParseError(f"bad scalar string {s!r}")
        re_part = Fraction(m.group("re")) if m.group("re") is not None else Fraction(0)
        im_raw = m.group("im")
        if im_raw is None:
            im_part = Fraction(0)
        elif im_raw in ("", "+"):
            im_part = Fraction(1)
        elif im_raw == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(im_raw)
        return GaussianRational(re_part, im_part)
    if isinstance(s, list) and len(s) == 2:
        try:
            return complex(float(s[0]), float(s[1]))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad scalar pair {s!r}") from exc
    if isinstance(s, (int, float)) and not isinstance(s, bool):
        return complex(float(s), 0.0)
    raise ParseError(f"bad scalar {s!r}")


def matrix_to_json(g: ProjMatrix):
    return {"rows": [[scalar_to_json(v) for v in row] for row in g.rows]}


def matrix_from_json(obj) -> ProjMatrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError("expected an object with a 'rows' field")
    rows = obj["rows"]
    if (
        not isinstance(rows, list)
        or len(rows) != 3
        or any(not isinstance(r, list) or len(r) != 3 for r in rows)
    ):
        raise ParseError("'rows' must be a 3x3 array")
    vals = [[scalar_from_json(v) for v in r] for r in rows]
    exact = all(isinstance(v, GaussianRational) for r in vals for v in r)
    if not exact:
        vals = [[complex(v) if isinstance(v, GaussianRational) else v for v in r] for r in vals]
    return ProjMatrix(vals)


def vector_to_json(vec):
    return [scalar_to_json(Fraction(v)) if not isinstance(v, float) else scalar_to_json(complex(v)) for v in vec]


def lattice_to_json(lat):
    return {
        "ambient": lat.ambient_dim,
        "generators": [
            [scalar_to_json(v if isinstance(v, float) else Fraction(v)) for v in vec]
            for vec in lat.generators
        ],
        "basis": [
            [scalar_to_json(v if isinstance(v, float) else Fraction(v)) for v in vec]
            for vec in lat.basis
        ],
        "rank": lat.rank,
        "discrete": lat.discrete,
    }


def generators_from_json(obj):
    """[matrix, ...] or {"generators": [...], "labels": [...]?}."""
    if isinstance(obj, list):
        return [matrix_from_json(m) for m in obj], None
    if isinstance(obj, dict) and "generators" in obj:
        gens = [matrix_from_json(m) for m in obj["generators"]]
        labels = obj.get("labels")
        if labels is not None and (
            not isinstance(labels, list) or len(labels) != len(gens)
        ):
            raise ParseError("'labels' must match the generator count")
        return gens, labels
    if isinstance(obj, dict) and "rows" in obj:
        return [matrix_from_json(obj)], None
    raise ParseError("expected a matrix, a list of matrices, or a presentation object")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
