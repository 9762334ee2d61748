"""Brute-force verification harness for triangular matrix groups.

Everything here works on finite word balls: enumerate words in the
generators, bucket elements by layer shape, and check the structural
claims (normality of the core, rank bound, cone invariance) directly on
those finite sets.  Escape witnesses certify non-discreteness by exhibiting
a convergent sequence of distinct conjugates; absence of a witness proves
nothing, and reports say so.
"""

from __future__ import annotations

from . import lattice
from .matrix import (
    ProjMatrix,
    ShapeKind,
    conjugate,
    lambda12,
    lambda23,
    pi_proj,
    shape_of,
)
from .scalar import is_exact, scalar_is_zero, scalars_equal

MAX_BALL_RADIUS = 8
MAX_BALL_SIZE = 10**6
MAX_ESCAPE_STEPS = 200


class WitnessError(ValueError):
    pass


class GroupPresentation:
    """A finitely generated group given by matrix generators."""

    def __init__(self, generators, labels=None):
        self.generators = list(generators)
        if labels is None:
            labels = [f"g{i+1}" for i in range(len(self.generators))]
        self.labels = list(labels)

    def __repr__(self):
        return f"GroupPresentation({', '.join(self.labels)})"


class LayerDecomposition:
    """Generators bucketed into the four layers with the rank vector."""

    def __init__(self, core_gens, xi_gens, eta_gens, gamma_gens, k, r, m, n,
                 diagnostic=None):
        self.core_gens = core_gens
        self.xi_gens = xi_gens
        self.eta_gens = eta_gens
        self.gamma_gens = gamma_gens
        self.k = k
        self.r = r
        self.m = m
        self.n = n
        self.diagnostic = diagnostic

    @property
    def ranks(self):
        return (self.k, self.r, self.m, self.n)

    def __repr__(self):
        return f"LayerDecomposition(k={self.k}, r={self.r}, m={self.m}, n={self.n})"


class WitnessReport:
    def __init__(self, sequence, limit, min_gap, verdict):
        self.sequence = sequence
        self.limit = limit
        self.min_gap = min_gap
        self.verdict = verdict  # "converging" | "inconclusive"

    def __repr__(self):
        return f"WitnessReport({self.verdict}, min_gap={self.min_gap:.3g})"


def ball(p: GroupPresentation, L: int):
    """All distinct elements of words of length <= L, deterministic order.

    Words are explored by length, then lexicographically over the letters
    (generator 1, inverse 1, generator 2, inverse 2, ...).
    """
    if L > MAX_BALL_RADIUS:
        raise WitnessError("ball radius capped at 8")
    if len(p.generators) > 6:
        raise WitnessError("at most 6 generators")
    letters = []
    for g in p.generators:
        letters.append(g)
        letters.append(g.inverse())
    exact = all(g.exact for g in p.generators)
    ident = ProjMatrix.identity(exact)
    seen = {ident.key(): ident}
    out = [ident]
    frontier = [ident]
    for _ in range(L):
        nxt = []
        for w in frontier:
            for a in letters:
                m = w * a
                key = m.key()
                if key not in seen:
                    if len(seen) >= MAX_BALL_SIZE:
                        raise WitnessError("ball size cap exceeded")
                    seen[key] = m
                    out.append(m)
                    nxt.append(m)
        frontier = nxt
    return out


def core_extract(p: GroupPresentation, L: int):
    """Lattice of (x, y) values over core-shaped ball elements."""
    vals = []
    for g in ball(p, L):
        s = shape_of(g)
        if s.kind is ShapeKind.CORE:
            vals.append(_xy_vector(s.x, s.y))
    # up to 6 generators for the reduction: a greedy sweep keeps the
    # lattice growing without exceeding the reduce() input bound
    return _reduce_incremental(vals)


def _xy_vector(x, y):
    if is_exact(x) and is_exact(y):
        return (x.re, x.im, y.re, y.im)
    x, y = complex(x), complex(y)
    return (x.real, x.imag, y.real, y.imag)


def _reduce_incremental(vals, dim=4):
    lat = lattice.reduce([], dim)
    for v in vals:
        if lat.discrete is True and lat.rank > 0 and lattice.member(v, lat) is not None:
            continue
        cand = list(lat.basis) + [v]
        if len(cand) > 6:
            cand = cand[-6:]
        lat = lattice.reduce(cand, dim)
    return lat


def layer_decompose(p: GroupPresentation, L: int):
    """Bucket ball elements into the four layers and compute rank vector."""
    for g in p.generators:
        if not g.is_upper_triangular():
            raise WitnessError("requires upper triangular presentation")
    elements = ball(p, L)
    core_vals, pi_vals, l12_vals, l23_vals = [], [], [], []
    core_gens, xi_gens, eta_gens, gamma_gens = [], [], [], []
    for g in elements:
        s = shape_of(g)
        if s.kind is ShapeKind.DIAGONAL:
            continue
        if s.kind is ShapeKind.CORE:
            core_vals.append(_xy_vector(s.x, s.y))
            _keep(core_gens, g)
        elif s.kind in (ShapeKind.TRANSLATION, ShapeKind.LAYER2):
            pi_vals.append(pi_proj(g))
            _keep(xi_gens, g)
        elif s.kind is ShapeKind.LAYER3:
            l12_vals.append(lambda12(g.normalize()))
            _keep(eta_gens, g)
        else:  # LAYER4
            _keep(gamma_gens, g)
        l23 = lambda23(g.normalize())
        if not scalars_equal(l23, 1 if g.exact else complex(1)):
            l23_vals.append(l23)

    k = _reduce_incremental(core_vals).rank
    r = _reduce_incremental([_c_vector(v) for v in pi_vals], 2).rank
    m = _mult_rank(l12_vals)
    n = _mult_rank(l23_vals)
    diagnostic = None
    if k + r + m + n > 4:
        diagnostic = (
            "rank bound violated: input is not a torsion-free discrete "
            "non-commutative triangular group"
        )
    return LayerDecomposition(
        core_gens, xi_gens, eta_gens, gamma_gens, k, r, m, n, diagnostic
    )


def _keep(bucket, g, cap=4):
    if len(bucket) < cap:
        bucket.append(g)


def _c_vector(v):
    if is_exact(v):
        return (v.re, v.im)
    v = complex(v)
    return (v.real, v.imag)


def _mult_rank(values, cap=6):
    """Multiplicative rank of a value set, fed incrementally."""
    chosen = []
    rank = 0
    for z in values:
        if len(chosen) >= cap:
            break
        cand = chosen + [z]
        r = lattice.rank_of_multiplicative([complex(c) for c in cand])
        if r > rank:
            chosen = cand
            rank = r
    return rank


# ---------------------------------------------------------------------------
# membership oracles used by normality_check


class _CoreMembership:
    def __init__(self, lat):
        self.lat = lat

    def __call__(self, g):
        s = shape_of(g)
        if s.kind is ShapeKind.DIAGONAL:
            return True
        if s.kind is not ShapeKind.CORE:
            return False
        return lattice.member(_xy_vector(s.x, s.y), self.lat) is not None


class _TranslationMembership:
    def __init__(self, lat):
        self.lat = lat

    def __call__(self, g):
        s = shape_of(g)
        if s.kind is ShapeKind.DIAGONAL:
            return True
        if s.kind is ShapeKind.TRANSLATION:
            n = g.normalize()
            vec = _xy_vector(n.entry(1, 3), n.entry(2, 3))
        elif s.kind is ShapeKind.CORE and scalar_is_zero(s.x):
            # h_{x,0} carries core shape g_{0,x}
            vec = _xy_vector(s.y, 0 * s.y)
        else:
            return False
        return lattice.member(vec, self.lat) is not None


def _membership_test(sub: GroupPresentation):
    shapes = [shape_of(g).kind for g in sub.generators]
    if all(s in (ShapeKind.CORE, ShapeKind.DIAGONAL) for s in shapes):
        vals = []
        for g in sub.generators:
            s = shape_of(g)
            if s.kind is ShapeKind.CORE:
                vals.append(_xy_vector(s.x, s.y))
        return _CoreMembership(_reduce_incremental(vals))
    if all(
        s in (ShapeKind.TRANSLATION, ShapeKind.CORE, ShapeKind.DIAGONAL)
        for s in shapes
    ):
        vals = []
        for g in sub.generators:
            n = g.normalize()
            s = shape_of(g)
            if s.kind is ShapeKind.DIAGONAL:
                continue
            if s.kind is ShapeKind.TRANSLATION:
                vals.append(_xy_vector(n.entry(1, 3), n.entry(2, 3)))
            elif scalar_is_zero(s.x):
                vals.append(_xy_vector(s.y, 0 * s.y))
            else:
                raise WitnessError("membership test unavailable")
        return _TranslationMembership(_reduce_incremental(vals))
    raise WitnessError("membership test unavailable")


def normality_check(sub: GroupPresentation, whole: GroupPresentation, bound: int):
    """Conjugation-stability of sub inside whole over a word ball.

    Returns (True, None) or (False, (w, s)) with the first failing
    conjugation w * s * w^-1.
    """
    test = _membership_test(sub)
    elements = ball(sub, bound)
    # one-sided stability: conjugation by a generator maps sub into sub.
    # Inverse conjugators are deliberately excluded — the constructed core
    # lattices are stable under an injective (not surjective) endomorphism.
    for w in whole.generators:
        for s in elements:
            if not test(conjugate(w, s)):
                return False, (w, s)
    return True, None


# ---------------------------------------------------------------------------
# escape witnesses


def _proj_distance(a: ProjMatrix, b: ProjMatrix):
    na, nb = a.normalize(), b.normalize()
    return max(
        abs(complex(na.rows[i][j]) - complex(nb.rows[i][j]))
        for i in range(3)
        for j in range(3)
    )


def escape_witness(gamma: ProjMatrix, h: ProjMatrix, K: int):
    """Conjugation sequence tau_k = gamma^k h gamma^-k with a convergence verdict.

    Verdict "converging" requires pairwise distinct terms whose distance to
    the last term decreases strictly below 1e-6 — the shape of a
    non-discreteness certificate.
    """
    if K > MAX_ESCAPE_STEPS:
        raise WitnessError("escape steps capped at 200")
    seq = []
    ginv = gamma.inverse()
    cur = h
    for _ in range(K):
        cur = (gamma * cur * ginv).normalize()
        seq.append(cur)
    limit = seq[-1]
    keys = {t.key() for t in seq}
    distinct = len(keys) == len(seq)
    gaps = [_proj_distance(t, limit) for t in seq[:-1]]
    decreasing = all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:]))
    min_gap = min(gaps) if gaps else float("inf")
    verdict = (
        "converging"
        if distinct and decreasing and min_gap < 1e-6
        else "inconclusive"
    )
    return WitnessReport(seq, limit, min_gap, verdict)


# ---------------------------------------------------------------------------
# invariant cone


def cone_invariance_check(p: GroupPresentation, L: int, samples: int):
    """Check that the cone of lines through e1 and [0:-y:x] is preserved.

    For every ball element w and every core basis point (x, y): w must fix
    e1 projectively and map the line span{e1, (0,-y,x)} onto a line
    span{e1, (0,-y',x')} with (x', y') back in the core lattice.  Sampled
    numerically along each line.  Returns (True, None) or
    (False, counterexample-description).
    """
    import numpy as np

    core_lat = core_extract(p, min(L, 3))
    if core_lat.rank < 1:
        raise WitnessError("trivial core")
    words = ball(p, min(L, 3))
    points = _lattice_points(core_lat)
    e1 = np.array([1.0, 0.0, 0.0], dtype=complex)
    tol = 1e-9
    for w in words:
        W = np.array(
            [[complex(v) for v in row] for row in w.normalize().rows],
            dtype=complex,
        )
        img_e1 = W @ e1
        if abs(img_e1[1]) > tol * max(1.0, abs(img_e1[0])) or abs(
            img_e1[2]
        ) > tol * max(1.0, abs(img_e1[0])):
            return False, {"element": w, "reason": "e1 not fixed"}
        for (x, y) in points:
            v = np.array([0.0, -y, x], dtype=complex)
            iv = W @ v
            # direction of the image line modulo e1
            bp, cp = iv[1], iv[2]
            scale = max(abs(bp), abs(cp))
            if scale <= tol:
                continue  # line collapsed onto e1's direction: still in cone
            if not _line_in_core(cp, -bp, core_lat):
                return False, {
                    "element": w,
                    "point": (x, y),
                    "reason": "image line misses the core lattice",
                }
            # sampled points of the line must land on the image line
            ts = np.linspace(-1.0, 1.0, max(2, samples))
            for t in ts:
                q = e1 + t * v
                iq = W @ q
                # must be a combination of e1 and iv
                resid = _residual_off_plane(iq, e1, iv)
                if resid > tol * max(1.0, float(np.max(np.abs(iq)))):
                    return False, {
                        "element": w,
                        "point": (x, y),
                        "reason": "sampled image leaves the line",
                    }
    return True, None


def _lattice_points(lat):
    pts = []
    for b in lat.basis:
        x = complex(float(b[0]), float(b[1]))
        y = complex(float(b[2]), float(b[3]))
        pts.append((x, y))
    if len(pts) == 2:
        pts.append((pts[0][0] + pts[1][0], pts[0][1] + pts[1][1]))
    return pts


def _line_in_core(xp, yp, lat):
    """Does some nonzero scalar multiple of (xp, yp) lie in the lattice?"""
    import numpy as np

    if lat.rank == 0:
        return False
    B = np.array([[float(c) for c in b] for b in lat.basis], dtype=float).T
    target = np.array(
        [xp.real, xp.imag, yp.real, yp.imag], dtype=float
    )
    # solve B @ c = s * target over the reals: project target onto the
    # lattice's real span
    coeffs, *_ = np.linalg.lstsq(B, target, rcond=None)
    recon = B @ coeffs
    nrm = np.linalg.norm(target)
    if nrm == 0:
        return False
    return bool(np.linalg.norm(recon - target) <= 1e-9 * max(1.0, nrm))


def _residual_off_plane(q, u, v):
    import numpy as np

    A = np.stack([u, v], axis=1)
    coeffs, *_ = np.linalg.lstsq(A, q, rcond=None)
    return float(np.linalg.norm(A @ coeffs - q))
