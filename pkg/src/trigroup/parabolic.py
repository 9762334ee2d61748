"""Parabolic normal forms and canonicalization of core-shaped groups.

Two jobs:

* ``recognize_form`` matches a purely parabolic generator set, in the given
  coordinates, against the six parabolic families (no conjugacy search);
* ``canonicalize_core`` conjugates one or two core-shaped generators onto one
  of the five canonical core groups G1..G5 and returns the conjugator.

The conjugators are chosen projectively rational: for generators
g_{x1,y1}, g_{x2,y2} the matrix [[1,0,0],[0,x1,y1],[0,x2,y2]] sends them to
g_{1,0}, g_{0,1} whenever x1*y2 - x2*y1 != 0, so exact inputs canonicalize
with exact arithmetic and no square roots.
"""

from __future__ import annotations

from fractions import Fraction

from . import lattice
from .classify import ElementKind, classify_element
from .matrix import ProjMatrix, ShapeKind, conjugate, core, shape_of
from .scalar import (
    GaussianRational,
    coerce_scalar,
    is_exact,
    scalar_is_zero,
    scalars_equal,
)


class ParabolicError(ValueError):
    pass


# ---------------------------------------------------------------------------
# the six parabolic families


class ParabolicForm:
    name = "?"

    def report(self):
        return {"form": self.name, "parameters": {}, "unverified": []}


class FormWMu(ParabolicForm):
    """Commuting family [[u, w*u, 0],[0, u, 0],[0, 0, u^-2]] with u = mu(w)."""

    name = "FormWMu"

    def __init__(self, W, mu_values):
        self.W = W
        self.mu_values = mu_values


class FormW(ParabolicForm):
    """Translation family h_{x,y} over an additive subgroup of C^2."""

    name = "FormW"

    def __init__(self, W):
        self.W = W


class FormRLW(ParabolicForm):
    """Family [[1, x, L(x)+x^2/2+w],[0,1,x],[0,0,1]], x in R, w in W."""

    name = "FormRLW"

    def __init__(self, R, L_values, W):
        self.R = R
        self.L_values = L_values
        self.W = W

    def report(self):
        r = super().report()
        r["unverified"] = ["divergence condition on L over non-discrete R"]
        return r


class FormWStar(ParabolicForm):
    """Core family g_{x,y} over a discrete W of rank at most 2."""

    name = "FormWStar"

    def __init__(self, W):
        self.W = W


class FormNonComm5(ParabolicForm):
    """Non-commutative family <g_{1,0}, g_{p/q,1/r}, [[1,x,y],[0,1,1],[0,0,1]]>."""

    name = "FormNonComm5"

    def __init__(self, x, y, p, q, r):
        self.x = x
        self.y = y
        self.p = p
        self.q = q
        self.r = r


class FormNonComm6(ParabolicForm):
    """Non-commutative family <g_{1,0}, g_{0,1}, [[1,a+c,b],[0,1,c],[0,0,1]]>."""

    name = "FormNonComm6"

    def __init__(self, W, a, b, c):
        self.W = W
        self.a = a
        self.b = b
        self.c = c


def _is_one(v):
    return scalars_equal(v, coerce_scalar(1, is_exact(v)))


def _entry_is(g, i, j, value):
    return scalars_equal(g.entry(i, j), coerce_scalar(value, g.exact))


def recognize_form(gens):
    """Match purely parabolic generators against the six families.

    The match happens in the given coordinates; inputs must already be in
    normal-form position.  Raises ParabolicError on loxodromic generators or
    when no family matches.
    """
    if not gens:
        raise ParabolicError("no generators")
    if len(gens) > 4:
        raise ParabolicError("too many generators")
    for g in gens:
        if classify_element(g).is_loxodromic():
            raise ParabolicError("loxodromic generator present")

    shapes = [shape_of(g) for g in gens]
    kinds = [s.kind for s in shapes]

    if all(k in (ShapeKind.CORE, ShapeKind.DIAGONAL) for k in kinds):
        vals = [
            (s.x, s.y) for s in shapes if s.kind is ShapeKind.CORE
        ]
        W = lattice.reduce([_pair_vector(x, y) for x, y in vals], 4)
        if W.discrete is not True:
            raise ParabolicError("core lattice not verifiably discrete")
        if W.rank > 2:
            raise ParabolicError("core lattice rank exceeds 2")
        return FormWStar(W)

    if all(_translation_like(g, s) for g, s in zip(gens, shapes)):
        vals = []
        for g in gens:
            n = g.normalize()
            vals.append(_pair_vector(n.entry(1, 3), n.entry(2, 3)))
        W = lattice.reduce(vals, 4)
        return FormW(W)

    if all(_wmu_like(g) for g in gens):
        ws, mus = [], []
        for g in gens:
            mu = g.entry(1, 1)
            ws.append(g.entry(1, 2) / mu)
            mus.append(mu)
        W = lattice.reduce(ws, 2)
        if W.discrete is not True:
            raise ParabolicError("W not verifiably discrete")
        return FormWMu(W, mus)

    if all(_rlw_like(g) for g in gens):
        return _build_rlw(gens)

    if len(gens) == 3:
        form = _try_noncomm6(gens, shapes)
        if form is not None:
            return form
        form = _try_noncomm5(gens, shapes)
        if form is not None:
            return form

    raise ParabolicError("unrecognized — conjugate the input first")


def _pair_vector(x, y):
    if is_exact(x) and is_exact(y):
        return (x.re, x.im, y.re, y.im)
    x, y = complex(x), complex(y)
    return (x.real, x.imag, y.real, y.imag)


def _translation_like(g, s):
    if s.kind is ShapeKind.TRANSLATION or s.kind is ShapeKind.DIAGONAL:
        return True
    # h_{x,0} has core shape g_{0,x}
    return s.kind is ShapeKind.CORE and scalar_is_zero(s.x)


def _wmu_like(g):
    return (
        g.is_upper_triangular()
        and scalars_equal(g.entry(1, 1), g.entry(2, 2))
        and scalar_is_zero(g.entry(1, 3))
        and scalar_is_zero(g.entry(2, 3))
        and _is_one(g.entry(1, 1) ** 2 * g.entry(3, 3))
    )


def _rlw_like(g):
    if not g.is_upper_triangular() or not g.is_unipotent():
        return False
    n = g.normalize()
    return scalars_equal(n.entry(1, 2), n.entry(2, 3))


def _build_rlw(gens):
    two = None
    xs, lvals, ws = [], [], []
    for g in gens:
        n = g.normalize()
        x = n.entry(1, 2)
        top = n.entry(1, 3)
        if scalar_is_zero(x):
            ws.append(top)
        else:
            if two is None:
                two = coerce_scalar(2, is_exact(x))
            xs.append(x)
            lvals.append(top - x * x / two)
    R = lattice.reduce(xs, 2) if xs else lattice.reduce([], 2)
    W = lattice.reduce(ws, 2) if ws else lattice.reduce([], 2)
    if W.discrete is not True:
        raise ParabolicError("W not verifiably discrete")
    if R.discrete is True and W.rank + R.rank > 4:
        raise ParabolicError("rank(W)+rank(R) exceeds 4")
    return FormRLW(R, lvals, W)


def _is_core_value(s, x, y):
    return (
        s.kind is ShapeKind.CORE
        and scalars_equal(s.x, coerce_scalar(x, is_exact(s.x)))
        and scalars_equal(s.y, coerce_scalar(y, is_exact(s.y)))
    )


def _try_noncomm6(gens, shapes):
    order = _find_pair(shapes, (1, 0), (0, 1))
    if order is None:
        return None
    i, j, k = order
    u = gens[k]
    if shape_of(u).kind is not ShapeKind.LAYER2 and shape_of(u).kind is not ShapeKind.TRANSLATION:
        return None
    n = u.normalize()
    c = n.entry(2, 3)
    a = n.entry(1, 2) - c
    b = n.entry(1, 3)
    if scalar_is_zero(a):
        raise ParabolicError("a must be nonzero")
    if not _z_independent(c):
        return None
    W = lattice.reduce([a], 2)
    return FormNonComm6(W, a, b, c)


def _try_noncomm5(gens, shapes):
    # g_{1,0} first, then g_{c,d} with c = p/q, d = 1/r, then the unipotent
    # with (2,3) entry 1
    first = None
    for idx, s in enumerate(shapes):
        if _is_core_value(s, 1, 0):
            first = idx
            break
    if first is None:
        return None
    rest = [idx for idx in range(3) if idx != first]
    for second in rest:
        third = (set(rest) - {second}).pop()
        s2 = shapes[second]
        if s2.kind is not ShapeKind.CORE:
            continue
        u = gens[third].normalize()
        if shape_of(u).kind not in (ShapeKind.LAYER2, ShapeKind.TRANSLATION):
            continue
        if not _is_one(u.entry(2, 3)):
            continue
        pq = _as_fraction(s2.x)
        dr = _as_fraction(s2.y)
        if pq is None or dr is None or dr == 0:
            continue
        if dr.numerator not in (1, -1):
            continue
        p, q = pq.numerator, pq.denominator
        r = dr.denominator * dr.numerator  # d = 1/r
        if r % (q * q) != 0:
            raise ParabolicError("q^2 must divide r")
        from math import gcd

        if gcd(p, q) != 1:
            raise ParabolicError("p, q must be coprime")
        return FormNonComm5(u.entry(1, 2), u.entry(1, 3), p, q, r)
    return None


def _find_pair(shapes, v1, v2):
    i = j = None
    for idx, s in enumerate(shapes):
        if i is None and _is_core_value(s, *v1):
            i = idx
        elif j is None and _is_core_value(s, *v2):
            j = idx
    if i is None or j is None:
        return None
    k = ({0, 1, 2} - {i, j}).pop()
    return i, j, k


def _as_fraction(v):
    if is_exact(v):
        if v.im != 0:
            return None
        return v.re
    c = complex(v)
    if abs(c.imag) > 1e-9:
        return None
    f = Fraction(c.real).limit_denominator(10**6)
    if abs(float(f) - c.real) > 1e-9:
        return None
    return f


def _z_independent(c):
    """{1, c} Z-linearly independent: c not real, or real but irrational."""
    if is_exact(c):
        return c.im != 0
    z = complex(c)
    if abs(z.imag) > 1e-9:
        return True
    f = Fraction(z.real).limit_denominator(10**6)
    return abs(float(f) - z.real) > 1e-9


# ---------------------------------------------------------------------------
# canonicalization of core groups


class CanonicalCoreGroup:
    """Canonical form G1..G5 of a rank-<=2 core group plus the conjugator."""

    def __init__(self, tag, conjugator, parameter=None, canonical_gens=None):
        self.tag = tag
        self.conjugator = conjugator
        self.parameter = parameter
        self.canonical_gens = canonical_gens or []

    def __repr__(self):
        return f"CanonicalCoreGroup({self.tag})"


def _core_xy(g):
    s = shape_of(g)
    if s.kind is not ShapeKind.CORE:
        raise ParabolicError("generators not CoreShape")
    return s.x, s.y


def _is_real(v):
    if is_exact(v):
        return v.im == 0
    return abs(complex(v).imag) <= 1e-9


def canonicalize_core(gens):
    """Conjugate one or two core generators onto a canonical core group.

    Returns a CanonicalCoreGroup whose conjugator maps each input generator
    exactly onto the listed canonical generators (exact mode verifies this).
    """
    if len(gens) not in (1, 2):
        raise ParabolicError("expected 1 or 2 generators")
    xy = [_core_xy(g) for g in gens]
    vecs = [_pair_vector(x, y) for x, y in xy]
    lat = lattice.reduce(vecs, 4)
    if lat.discrete is not True:
        raise ParabolicError("non-discrete span")
    rank = lat.rank

    if rank == 2 and len(gens) == 2:
        result = _canonicalize_rank2(gens, xy)
    elif rank == 1:
        result = _canonicalize_rank1(gens, xy, lat)
    else:
        raise ParabolicError("span must have rank 1 or 2")

    # post-check: the conjugator reproduces the canonical generators
    if all(g.exact for g in gens):
        from .matrix import proj_eq

        images = [conjugate(result.conjugator, g) for g in gens]
        for img in images:
            if not any(proj_eq(img, c) for c in result.canonical_gens) and not _core_power_of(
                img, result.canonical_gens
            ):
                raise ParabolicError("canonicalization post-check failed")
    return result


def _core_power_of(img, canon):
    # rank-1 inputs with two generators map to integer powers of the
    # canonical generator
    s = shape_of(img)
    if s.kind is ShapeKind.DIAGONAL:
        return True
    if s.kind is not ShapeKind.CORE:
        return False
    for c in canon:
        t = shape_of(c)
        for v, w in ((s.x, t.x), (s.y, t.y)):
            if scalar_is_zero(w) != scalar_is_zero(v):
                break
        else:
            return True
    return False


def _canonicalize_rank2(gens, xy):
    (x1, y1), (x2, y2) = xy
    det = x1 * y2 - x2 * y1
    exact = gens[0].exact

    if not scalar_is_zero(x1) and not scalar_is_zero(det):
        conj = ProjMatrix([[1, 0, 0], [0, x1, y1], [0, x2, y2]])
        canon = [core(1, 0), core(0, 1)]
        return CanonicalCoreGroup("Gamma1", conj, canonical_gens=canon)
    if scalar_is_zero(x1) and not scalar_is_zero(x2):
        conj = ProjMatrix([[1, 0, 0], [0, x2, y2], [0, x1, y1]])
        canon = [core(1, 0), core(0, 1)]
        return CanonicalCoreGroup("Gamma1", conj, canonical_gens=canon)
    if scalar_is_zero(x1) and scalar_is_zero(x2):
        y = y2 / y1
        if _is_real(y):
            raise ParabolicError("non-discrete span")  # real ratio, rank 2
        conj = ProjMatrix([[1, 0, 0], [0, 1, 0], [0, 0, y1]])
        canon = [core(0, 1), core(0, y)]
        return CanonicalCoreGroup("Gamma2", conj, parameter=y, canonical_gens=canon)
    # x1 != 0, det == 0
    x = x2 / x1
    if _is_real(x):
        raise ParabolicError("non-discrete span")
    conj = ProjMatrix([[1, 0, 0], [0, x1, y1], [0, 0, x1]])
    canon = [core(1, 0), core(x, 0)]
    return CanonicalCoreGroup("Gamma3", conj, parameter=x, canonical_gens=canon)


def _canonicalize_rank1(gens, xy, lat):
    if len(gens) == 1:
        x, y = xy[0]
    else:
        v = lat.basis[0]
        if gens[0].exact:
            x = GaussianRational(v[0], v[1])
            y = GaussianRational(v[2], v[3])
        else:
            x = complex(v[0], v[1])
            y = complex(v[2], v[3])
    if not scalar_is_zero(x):
        conj = ProjMatrix([[1, 0, 0], [0, x, y], [0, 0, x]])
        return CanonicalCoreGroup("Gamma4", conj, canonical_gens=[core(1, 0)])
    conj = ProjMatrix([[1, 0, 0], [0, 1, 0], [0, 0, y]])
    return CanonicalCoreGroup("Gamma5", conj, canonical_gens=[core(0, 1)])
