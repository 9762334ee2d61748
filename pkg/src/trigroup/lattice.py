"""Finitely generated additive subgroups of R^d (d <= 4).

Exact mode (all coordinates rational): a Z-basis is computed by integer row
reduction after clearing denominators, so rank, membership and discreteness
are decided exactly.  A finitely generated subgroup of Q^d is always
discrete.

Float mode (any irrational coordinate): a bounded integer-relation search
(LLL on a scaled embedding) looks for Z-dependencies and for small nonzero
integer combinations.  A small-but-nonzero combination, or a Z-rank
exceeding the real span dimension, marks the group non-discrete; otherwise
discreteness stays unknown (None) and callers must treat that as a
validation failure, never as success.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalar import GaussianRational, TOLERANCE, is_exact

#: integer-relation search bounds (configurable)
RELATION_COEFF_BOUND = 10**4
RELATION_NORM_FACTOR = 1e-7
DEPENDENCE_NORM_FACTOR = 1e-10

MAX_GENERATORS = 7  # 6 per the contract, +1 for the 2*pi augmentation


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer linear algebra helpers


def hermite_basis(rows):
    """Row-style Hermite reduction of integer rows; returns basis rows.

    The returned rows generate the same Z-module as the input and are
    Z-linearly independent (echelon with positive pivots).
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    col = 0
    while rows and col < ncols:
        rows = [r for r in rows if any(r)]
        active = [r for r in rows if r[col] != 0]
        if not active:
            col += 1
            continue
        # gcd elimination in this column
        while True:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            done = True
            for r in active[1:]:
                q = r[col] // piv[col]
                for j in range(ncols):
                    r[j] -= q * piv[j]
                if r[col] != 0:
                    done = False
            active = [r for r in active if r[col] != 0]
            if done or len(active) == 1:
                break
        piv = active[0]
        if piv[col] < 0:
            piv = [-v for v in piv]
        basis.append(piv)
        rows = [r for r in rows if r is not piv and not (r[col] != 0 and r == piv)]
        rows = [r for r in rows if r[col] == 0 or _reduce_by(r, piv, col, ncols)]
        col += 1
    # back-substitute pivots above is unnecessary for our uses
    return basis


def _reduce_by(r, piv, col, ncols):
    q = r[col] // piv[col]
    for j in range(ncols):
        r[j] -= q * piv[j]
    if r[col] != 0:
        # remainder should vanish after gcd elimination
        raise AssertionError("hermite reduction failed")
    return any(r)


def lll_reduce(basis):
    """Standard LLL (delta = 0.99) on integer basis rows."""
    b = [list(r) for r in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(u, v):
        return sum(Fraction(x) * y for x, y in zip(u, v))

    def gram_schmidt():
        bstar = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    mu[i][j] = Fraction(0)
                    continue
                mu[i][j] = dot(b[i], bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(dot(v, v))
        return bstar, mu, norms

    delta = Fraction(99, 100)
    bstar, mu, norms = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                bstar, mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return b


def integer_matrix_rank(rows):
    """Rank over Q of an integer matrix."""
    rows = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# the Lattice type


class Lattice:
    """Finitely generated additive subgroup of R^d with a reduced basis.

    ``discrete`` is True, False or None (unknown, float mode only).
    Exact-mode vectors are tuples of Fractions; float-mode vectors are
    tuples of floats.
    """

    def __init__(self, ambient_dim, generators, basis, rank, discrete, exact):
        self.ambient_dim = ambient_dim
        self.generators = generators
        self.basis = basis
        self.rank = rank
        self.discrete = discrete
        self.exact = exact

    def __repr__(self):
        return (
            f"Lattice(dim={self.ambient_dim}, rank={self.rank}, "
            f"discrete={self.discrete})"
        )


def _as_vector(v):
    """Coerce a scalar or sequence into a coordinate tuple."""
    if isinstance(v, GaussianRational):
        return (v.re, v.im)
    if isinstance(v, complex):
        return (v.real, v.imag)
    if isinstance(v, (int, Fraction, float)):
        return (v,)
    return tuple(v)


def _vectors(generators, ambient_dim=None):
    vecs = [_as_vector(v) for v in generators]
    if ambient_dim is None:
        ambient_dim = max((len(v) for v in vecs), default=2)
    out = []
    exact = True
    for v in vecs:
        if len(v) != ambient_dim:
            raise LatticeError("inconsistent vector dimensions")
        if any(isinstance(x, float) for x in v):
            exact = False
        out.append(tuple(v))
    if not exact:
        out = [tuple(float(x) for x in v) for v in out]
    else:
        out = [tuple(Fraction(x) for x in v) for v in out]
    return out, ambient_dim, exact


def reduce(generators, ambient_dim=None):
    """Compute a reduced Lattice from at most 6 generating vectors.

    Scalars (GaussianRational / complex) are accepted and mapped to R^2.
    """
    vecs, dim, exact = _vectors(generators, ambient_dim)
    if len(vecs) > 6:
        raise LatticeError("too many generators")
    if exact:
        return _reduce_exact(vecs, dim)
    return _reduce_float(vecs, dim)


def _reduce_exact(vecs, dim):
    vecs = [v for v in vecs if any(x != 0 for x in v)]
    if not vecs:
        return Lattice(dim, [], [], 0, True, True)
    denom = 1
    for v in vecs:
        for x in v:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    int_rows = [[int(x * denom) for x in v] for v in vecs]
    basis_int = hermite_basis(int_rows)
    basis = [tuple(Fraction(x, denom) for x in row) for row in basis_int]
    return Lattice(dim, vecs, basis, len(basis), True, True)


def _find_relations(vecs, dim, scale):
    """Bounded LLL search for integer relations among float vectors.

    Returns (dependencies, small_combos): dependencies are coefficient rows
    whose combination vanishes to working precision; small_combos are
    nonzero-but-tiny combinations (non-discreteness witnesses).
    """
    n = len(vecs)
    if n == 0:
        return [], []
    weight = 1e12 / max(scale, 1e-30)
    rows = []
    for i, v in enumerate(vecs):
        e = [0] * n
        e[i] = 1
        rows.append(e + [int(round(weight * x)) for x in v])
    reduced = lll_reduce(rows)
    deps, small = [], []
    for row in reduced:
        coeffs = row[:n]
        if not any(coeffs):
            continue
        if max(abs(c) for c in coeffs) > RELATION_COEFF_BOUND:
            continue
        combo = [
            sum(c * v[j] for c, v in zip(coeffs, vecs)) for j in range(dim)
        ]
        norm = math.sqrt(sum(x * x for x in combo))
        if norm < DEPENDENCE_NORM_FACTOR * scale:
            deps.append(coeffs)
        elif norm < RELATION_NORM_FACTOR * scale:
            small.append(coeffs)
    return deps, small


def _real_rank(vecs, dim, scale):
    """Numerical rank of the real span."""
    rows = [list(v) for v in vecs]
    rank = 0
    col = 0
    eps = 1e-9 * max(scale, 1e-30)
    while rank < len(rows) and col < dim:
        piv = max(range(rank, len(rows)), key=lambda i: abs(rows[i][col]))
        if abs(rows[piv][col]) < eps:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] / pv
            rows[i] = [a - f * c for a, c in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def _reduce_float(vecs, dim):
    gens = [v for v in vecs if any(abs(x) > 1e-15 for x in v)]
    if not gens:
        return Lattice(dim, [], [], 0, True, False)
    scale = max(math.sqrt(sum(x * x for x in v)) for v in gens)
    deps, small = _find_relations(gens, dim, scale)
    dep_rank = integer_matrix_rank(deps) if deps else 0
    zrank = len(gens) - dep_rank
    rrank = _real_rank(gens, dim, scale)
    discrete = None
    if small or zrank > rrank:
        discrete = False
    # basis: keep a maximal independent subset (greedy, exact dependencies)
    basis = _independent_subset(gens, dim, scale, zrank)
    return Lattice(dim, gens, basis, zrank, discrete, False)


def _independent_subset(gens, dim, scale, zrank):
    basis = []
    for v in gens:
        if len(basis) == zrank:
            break
        cand = basis + [v]
        deps, _ = _find_relations(cand, dim, scale)
        if not deps:
            basis.append(v)
    return basis


def member(v, lat: Lattice):
    """Integer coefficients expressing v in lat's basis, or None.

    Requires lat.discrete is True ("membership undecidable" otherwise).
    """
    if lat.discrete is not True:
        raise LatticeError("membership undecidable")
    vec = _as_vector(v)
    if lat.exact:
        vec = tuple(Fraction(x) for x in vec)
        return _member_exact(vec, lat)
    vec = tuple(float(x) for x in vec)
    return _member_float(vec, lat)


def _member_exact(vec, lat):
    if len(vec) != lat.ambient_dim:
        raise LatticeError("dimension mismatch")
    if not lat.basis:
        return () if all(x == 0 for x in vec) else None
    # solve over Q by Gaussian elimination on the transposed basis
    rows = [list(b) for b in lat.basis]
    ncoef = len(rows)
    aug = [[rows[i][j] for i in range(ncoef)] + [vec[j]] for j in range(lat.ambient_dim)]
    coeffs = _solve_rational(aug, ncoef)
    if coeffs is None:
        return None
    if any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def _solve_rational(aug, ncoef):
    nrows = len(aug)
    rank = 0
    pivots = []
    for col in range(ncoef):
        piv = None
        for i in range(rank, nrows):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for i in range(nrows):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * c for a, c in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    # inconsistency check
    for i in range(rank, nrows):
        if aug[i][ncoef] != 0:
            return None
    coeffs = [Fraction(0)] * ncoef
    for r, col in enumerate(pivots):
        coeffs[col] = aug[r][ncoef]
    return coeffs


def _member_float(vec, lat):
    if not lat.basis:
        return () if all(abs(x) <= TOLERANCE.abs_floor for x in vec) else None
    import numpy as np

    B = np.array(lat.basis, dtype=float).T
    target = np.array(vec, dtype=float)
    coeffs, *_ = np.linalg.lstsq(B, target, rcond=None)
    rounded = [int(round(c)) for c in coeffs]
    recon = B @ np.array(rounded, dtype=float)
    scale = max(1.0, float(np.max(np.abs(target))))
    if np.max(np.abs(recon - target)) <= TOLERANCE.rel * scale:
        return tuple(rounded)
    return None


def rank_of_multiplicative(values):
    """Rank of the subgroup of (C*, .) generated by the given values.

    Works through the logarithmic embedding z -> (log|z|, arg z) with the
    argument taken mod 2*pi: the 2*pi generator is adjoined and subtracted
    from the resulting rank when independent.  Heuristic (bounded relation
    search) for irrational inputs.
    """
    vals = list(values)
    if len(vals) > 6:
        raise LatticeError("too many values")
    vecs = []
    for z in vals:
        c = complex(z)
        if c == 0:
            raise LatticeError("zero value")
        vecs.append((math.log(abs(c)), math.atan2(c.imag, c.real)))
    nonzero = [v for v in vecs if abs(v[0]) > 1e-15 or abs(v[1]) > 1e-15]
    if not nonzero:
        return 0
    scale = max(
        max(math.sqrt(v[0] ** 2 + v[1] ** 2) for v in nonzero), 2 * math.pi
    )

    def zrank(vs):
        deps, _ = _find_relations(vs, 2, scale)
        dep_rank = integer_matrix_rank(deps) if deps else 0
        return len(vs) - dep_rank

    # the 2*pi generator is trivial in the quotient R x (R / 2*pi*Z) but
    # contributes exactly one to the plane rank, so subtract it back out
    r_full = zrank(nonzero + [(0.0, 2 * math.pi)])
    return r_full - 1
