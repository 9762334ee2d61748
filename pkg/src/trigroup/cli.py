"""Command line front end: JSON in, a single JSON document out.

Exit codes: 0 success, 2 validation failure, 3 parse error / bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cases, jsonio, witness
from .classify import classify_element
from .jsonio import ParseError
from .lattice import Lattice
from .matrix import NotTriangularError, ProjMatrix, SingularMatrixError
from .parabolic import ParabolicError, canonicalize_core, recognize_form
from .scalar import GaussianRational, TOLERANCE
from .witness import GroupPresentation, WitnessError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(3)


def _build_parser():
    top = _Parser(prog="trigroup", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)
    commands = [
        ("classify", "classify a triangular projective transformation"),
        ("decompose", "layer decomposition of a presentation"),
        ("canonicalize", "conjugate core generators to canonical form"),
        ("recognize", "match parabolic generators against the six forms"),
        ("case-table", "the twenty rank-profile rows"),
        ("case-check", "compiled admissibility verdicts"),
        ("case-construct", "build a family generator from parameters"),
        ("case-validate", "extract and check family parameters"),
        ("verify", "decompose plus normality and rank-bound checks"),
        ("witness", "conjugation escape sequence"),
    ]
    for name, help_ in commands:
        p = sub.add_parser(name, help=help_, add_help=True)
        p.error = top.error
        if name != "case-table":
            p.add_argument("input", nargs="?", help="input JSON file (default: stdin)")
        p.add_argument("--mode", choices=["exact", "float"], default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--ball", type=int, default=None)
        p.add_argument("--out", default=None)
    return top


def _load(args):
    try:
        if getattr(args, "input", None):
            with open(args.input) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except FileNotFoundError as exc:
        raise ParseError(str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _to_float(g: ProjMatrix) -> ProjMatrix:
    return ProjMatrix([[complex(v) for v in row] for row in g.rows])


def _apply_mode(gens, mode):
    if mode == "float":
        return [_to_float(g) for g in gens]
    if mode == "exact" and any(not g.exact for g in gens):
        raise ParabolicError("exact mode requires rational input")
    return gens


def _value_to_json(v):
    if isinstance(v, ProjMatrix):
        return jsonio.matrix_to_json(v)
    if isinstance(v, Lattice):
        return jsonio.lattice_to_json(v)
    if isinstance(v, (list, tuple)):
        return [_value_to_json(x) for x in v]
    if isinstance(v, dict):
        return {k: _value_to_json(x) for k, x in v.items()}
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, (Fraction, GaussianRational, float, complex)):
        return jsonio.scalar_to_json(v)
    return str(v)


def _decode_param(v):
    if isinstance(v, (str, list)):
        return jsonio.scalar_from_json(v)
    return v


def _decode_params(obj):
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ParseError("'params' must be an object")
    return {k: _decode_param(v) for k, v in obj.items()}


# -- subcommand handlers (return (document, exit_code)) ----------------------


def _cmd_classify(args):
    g = jsonio.matrix_from_json(_load(args))
    (g,) = _apply_mode([g], args.mode)
    try:
        c = classify_element(g)
    except NotTriangularError as exc:
        return {"error": str(exc)}, 2
    doc = {"class": c.kind.value}
    if c.lam is not None:
        doc["lambda"] = jsonio.scalar_to_json(c.lam)
    doc["eigenvalues"] = [jsonio.scalar_to_json(v) for v in c.eigenvalues]
    return doc, 0


def _presentation(args):
    gens, labels = jsonio.generators_from_json(_load(args))
    gens = _apply_mode(gens, args.mode)
    return GroupPresentation(gens, labels)


def _cmd_decompose(args):
    p = _presentation(args)
    L = args.ball if args.ball is not None else 3
    dec = witness.layer_decompose(p, L)
    violations = [dec.diagnostic] if dec.diagnostic else []
    doc = {
        "layers": {
            "core": [jsonio.matrix_to_json(g) for g in dec.core_gens],
            "xi": [jsonio.matrix_to_json(g) for g in dec.xi_gens],
            "eta": [jsonio.matrix_to_json(g) for g in dec.eta_gens],
            "gamma": [jsonio.matrix_to_json(g) for g in dec.gamma_gens],
        },
        "ranks": list(dec.ranks),
        "witnesses": p.labels,
        "violations": violations,
    }
    return doc, (2 if violations else 0)


def _cmd_canonicalize(args):
    gens, _ = jsonio.generators_from_json(_load(args))
    gens = _apply_mode(gens, args.mode)
    try:
        res = canonicalize_core(gens)
    except (ParabolicError, NotTriangularError) as exc:
        return {"error": str(exc)}, 2
    doc = {
        "tag": res.tag,
        "conjugator": jsonio.matrix_to_json(res.conjugator),
        "canonical_generators": [
            jsonio.matrix_to_json(g) for g in res.canonical_gens
        ],
    }
    if res.parameter is not None:
        doc["parameter"] = jsonio.scalar_to_json(res.parameter)
    return doc, 0


def _cmd_recognize(args):
    gens, _ = jsonio.generators_from_json(_load(args))
    gens = _apply_mode(gens, args.mode)
    try:
        form = recognize_form(gens)
    except (ParabolicError, NotTriangularError) as exc:
        return {"error": str(exc)}, 2
    doc = form.report()
    params = {}
    for attr in ("W", "R", "mu_values", "L_values", "x", "y", "p", "q", "r",
                 "a", "b", "c"):
        if hasattr(form, attr):
            params[attr] = _value_to_json(getattr(form, attr))
    doc["parameters"] = params
    return doc, 0


def _cmd_case_table(args):
    rows = [
        {"case": label, "k": k, "m": m, "n": n}
        for label, (k, m, n) in zip(cases.TABLE_LABELS, cases.table_cases())
    ]
    return rows, 0


def _verdict_record(cid, verdict):
    rec = {
        "case": cid.label,
        "j": cid.j,
        "verdict": verdict.kind,
        "anchor": verdict.anchor,
    }
    if verdict.families:
        rec["families"] = list(verdict.families)
    if verdict.note:
        rec["note"] = verdict.note
    if verdict.escape is not None:
        gamma, h = verdict.escape
        rec["escape"] = {
            "gamma": jsonio.matrix_to_json(gamma),
            "h": jsonio.matrix_to_json(h),
        }
    return rec


def _cmd_case_check(args):
    if getattr(args, "input", None) or not sys.stdin.isatty():
        try:
            query = _load(args)
        except ParseError:
            query = {}
    else:
        query = {}
    if isinstance(query, dict) and "case" in query:
        label = str(query["case"])
        try:
            k, m, n = cases.case_triple(label)
        except ValueError as exc:
            return {"error": str(exc)}, 2
        js = [int(query["j"])] if "j" in query else list(range(1, 7))
        recs = [
            _verdict_record(
                cases.CaseId(k, m, n, j),
                cases.admissibility(cases.CaseId(k, m, n, j)),
            )
            for j in js
        ]
        return (recs[0] if len(recs) == 1 else recs), 0
    return [_verdict_record(c, v) for c, v in cases.all_verdicts()], 0


def _cmd_case_construct(args):
    obj = _load(args)
    if not isinstance(obj, dict) or "family" not in obj:
        raise ParseError("expected {'family': ..., 'params': {...}}")
    tag = obj["family"]
    params = _decode_params(obj.get("params"))
    try:
        g = cases.construct(tag, params)
        loxo = cases.loxodromic_generators(tag, params)
        core_gens = cases.core_generators(tag, params)
    except ValueError as exc:
        return {"error": str(exc)}, 2
    doc = {
        "family": tag,
        "generator": jsonio.matrix_to_json(g),
        "loxodromic_generators": [jsonio.matrix_to_json(x) for x in loxo],
        "core_generators": [jsonio.matrix_to_json(x) for x in core_gens],
    }
    return doc, 0


def _cmd_case_validate(args):
    obj = _load(args)
    if not isinstance(obj, dict) or "family" not in obj or "matrix" not in obj:
        raise ParseError("expected {'family': ..., 'matrix': {...}, 'context': {...}}")
    tag = obj["family"]
    g = jsonio.matrix_from_json(obj["matrix"])
    (g,) = _apply_mode([g], args.mode)
    context = _decode_params(obj.get("context"))
    try:
        params, diags = cases.validate_report(tag, g, context)
    except ValueError as exc:
        return {"error": str(exc)}, 2
    doc = {"family": tag, "valid": params is not None, "diagnostics": diags}
    if params is not None:
        doc["parameters"] = _value_to_json(params)
    return doc, (0 if params is not None else 2)


def _cmd_verify(args):
    p = _presentation(args)
    L = args.ball if args.ball is not None else 3
    dec = witness.layer_decompose(p, L)
    violations = [dec.diagnostic] if dec.diagnostic else []
    checks = {"rank_bound": dec.diagnostic is None}
    if dec.core_gens and (dec.xi_gens or dec.eta_gens or dec.gamma_gens):
        sub = GroupPresentation(dec.core_gens)
        try:
            ok, fail = witness.normality_check(sub, p, min(L, 4))
            checks["core_normal"] = ok
            if not ok:
                w, s = fail
                violations.append("core subgroup is not conjugation-stable")
        except WitnessError as exc:
            checks["core_normal"] = None
            violations.append(str(exc))
    doc = {
        "ranks": list(dec.ranks),
        "checks": checks,
        "violations": violations,
    }
    failed = any(v is False for v in checks.values()) or bool(violations)
    return doc, (2 if failed else 0)


def _cmd_witness(args):
    obj = _load(args)
    if not isinstance(obj, dict) or "gamma" not in obj or "h" not in obj:
        raise ParseError("expected {'gamma': {...}, 'h': {...}}")
    gamma = jsonio.matrix_from_json(obj["gamma"])
    h = jsonio.matrix_from_json(obj["h"])
    gamma, h = _apply_mode([gamma, h], args.mode)
    K = args.ball if args.ball is not None else 40
    try:
        rep = witness.escape_witness(gamma, h, K)
    except (WitnessError, SingularMatrixError) as exc:
        return {"error": str(exc)}, 2
    doc = {
        "verdict": rep.verdict,
        "min_gap": float(format(rep.min_gap, ".17g")),
        "steps": len(rep.sequence),
        "limit": jsonio.matrix_to_json(rep.limit),
        "sequence": [jsonio.matrix_to_json(t) for t in rep.sequence],
    }
    return doc, 0


_HANDLERS = {
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "canonicalize": _cmd_canonicalize,
    "recognize": _cmd_recognize,
    "case-table": _cmd_case_table,
    "case-check": _cmd_case_check,
    "case-construct": _cmd_case_construct,
    "case-validate": _cmd_case_validate,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
}


def run(argv):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.tol is not None:
        TOLERANCE.rel = args.tol
    try:
        doc, code = _HANDLERS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 3
    except (ParabolicError, WitnessError, NotTriangularError,
            SingularMatrixError, cases.CaseConstraintError) as exc:
        doc, code = {"error": str(exc)}, 2
    text = jsonio.dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
