"""End-to-end acceptance checks for the whole package.

Each test corresponds to one deliverable property: classification
invariance, canonicalization round-trips, totality of the compiled case
table, normality and rank bounds of the constructed families, commutator
containment, type-III exclusion, cone invariance, the integer-matrix
instance, and brute-force ball equivalence against an independent
enumerator.  Oracles here are deliberately independent of the library
internals (closed-form state enumeration, bisection root finding).
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from trigroup import cases, lattice
from trigroup.cases import Verdict
from trigroup.classify import ElementKind, classify_element
from trigroup.matrix import (
    ProjMatrix,
    ShapeKind,
    commutator,
    conjugate,
    core,
    proj_eq,
    shape_of,
    translation,
)
from trigroup.parabolic import canonicalize_core
from trigroup.scalar import GaussianRational as G
from trigroup.scalar import is_exact
from trigroup.witness import (
    GroupPresentation,
    ball,
    cone_invariance_check,
    escape_witness,
    layer_decompose,
    normality_check,
)

UNITS = (G(1), G(-1), G(0, 1), G(0, -1))


def _rand_frac(rng, lo=-5, hi=5, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _rand_gauss(rng, nonzero=False):
    while True:
        z = G(_rand_frac(rng), _rand_frac(rng))
        if not nonzero or not (z.re == 0 and z.im == 0):
            return z


def _rand_nonreal(rng):
    while True:
        z = _rand_gauss(rng)
        if z.im != 0:
            return z


def _rand_conjugator(rng):
    diag = [rng.choice(UNITS) * G(rng.randint(1, 3)) for _ in range(3)]
    return ProjMatrix(
        [
            [diag[0], _rand_frac(rng), _rand_frac(rng)],
            [0, diag[1], _rand_frac(rng)],
            [0, 0, diag[2]],
        ]
    )


def _xy_vec(x, y):
    if is_exact(x):
        return (x.re, x.im, y.re, y.im)
    return (x.real, x.imag, y.real, y.imag)


# ---------------------------------------------------------------------------
# 1. classification suite


def _make_identity(rng):
    lam = rng.choice(UNITS) * G(rng.randint(1, 5))
    return ProjMatrix([[lam, 0, 0], [0, lam, 0], [0, 0, lam]])


def _make_elliptic(rng):
    while True:
        d = [rng.choice(UNITS) for _ in range(3)]
        if not (d[0] == d[1] == d[2]):
            return ProjMatrix.diag(*d)


def _make_parabolic(rng):
    while True:
        a, b, c = (_rand_frac(rng) for _ in range(3))
        if (a, b, c) != (0, 0, 0):
            return ProjMatrix([[1, a, b], [0, 1, c], [0, 0, 1]])


def _make_loxoparabolic(rng):
    lam = rng.choice(UNITS) * G(rng.randint(2, 5))
    return ProjMatrix([[lam, 1, 0], [0, lam, 0], [0, 0, rng.choice(UNITS)]])


def _make_homothety_i(rng):
    lam = rng.choice(UNITS) * G(rng.randint(2, 5))
    mu = rng.choice(UNITS)
    if rng.random() < 0.5:
        return ProjMatrix.diag(lam, mu, mu)
    return ProjMatrix.diag(mu, lam, mu)  # odd middle slot: still type I


def _make_homothety_iii(rng):
    lam = rng.choice(UNITS) * G(rng.randint(2, 5))
    mu = rng.choice(UNITS)
    return ProjMatrix.diag(mu, mu, lam)


def _make_rational_screw(rng):
    u = rng.choice(UNITS)
    w = rng.choice(UNITS[1:])  # ratio a root of unity other than 1
    c = rng.choice(UNITS) * G(rng.randint(2, 5))
    return ProjMatrix.diag(u * w, u, c)


def _make_irrational_screw(rng):
    # |3+4i| = 5 and (3+4i)/5 is not a root of unity
    u1, u2, u3 = (rng.choice(UNITS) for _ in range(3))
    return ProjMatrix.diag(u1 * G(5), u2 * G(3, 4), u3 * G(rng.randint(2, 4)))


def _make_strongly_loxodromic(rng):
    m = sorted(rng.sample(range(1, 9), 3))
    return ProjMatrix.diag(*(rng.choice(UNITS) * G(v) for v in m))


CLASS_MAKERS = {
    ElementKind.IDENTITY: _make_identity,
    ElementKind.ELLIPTIC: _make_elliptic,
    ElementKind.PARABOLIC: _make_parabolic,
    ElementKind.LOXOPARABOLIC: _make_loxoparabolic,
    ElementKind.COMPLEX_HOMOTHETY_I: _make_homothety_i,
    ElementKind.COMPLEX_HOMOTHETY_III: _make_homothety_iii,
    ElementKind.RATIONAL_SCREW: _make_rational_screw,
    ElementKind.IRRATIONAL_SCREW: _make_irrational_screw,
    ElementKind.STRONGLY_LOXODROMIC: _make_strongly_loxodromic,
}


def test_classification_suite():
    rng = random.Random(20260823)
    start = time.monotonic()
    for kind, make in CLASS_MAKERS.items():
        for _ in range(500):
            g = make(rng)
            assert classify_element(g).kind is kind, kind
            # float mode on the constructed representative
            gf = ProjMatrix([[complex(v) for v in row] for row in g.rows])
            assert classify_element(gf).kind is kind, (kind, "float")
            for _ in range(10):
                h = conjugate(_rand_conjugator(rng), g)
                assert classify_element(h).kind is kind, (kind, "conjugated")
    assert time.monotonic() - start < 30.0


# ---------------------------------------------------------------------------
# 2. canonicalization round-trip


def _images_match(result, gens):
    images = [conjugate(result.conjugator, g) for g in gens]
    return all(any(proj_eq(img, c) for c in result.canonical_gens) for img in images)


def test_canonicalization_round_trip():
    rng = random.Random(77)
    start = time.monotonic()
    for _ in range(200):
        # rank 2, first generator with x != 0 and independent pair
        while True:
            x1, y1 = _rand_gauss(rng, nonzero=True), _rand_gauss(rng)
            x2, y2 = _rand_gauss(rng), _rand_gauss(rng)
            if not (x1 * y2 - x2 * y1).re == 0 or not (x1 * y2 - x2 * y1).im == 0:
                break
        res = canonicalize_core([core(x1, y1), core(x2, y2)])
        assert res.tag == "Gamma1"
        assert _images_match(res, [core(x1, y1), core(x2, y2)])

        # rank 2 with x1 = 0, x2 != 0
        x2, y1 = _rand_gauss(rng, nonzero=True), _rand_gauss(rng, nonzero=True)
        y2 = _rand_gauss(rng)
        res = canonicalize_core([core(0, y1), core(x2, y2)])
        assert res.tag == "Gamma1"
        assert _images_match(res, [core(0, y1), core(x2, y2)])

        # both x = 0, non-real ratio
        y1 = _rand_gauss(rng, nonzero=True)
        t = _rand_nonreal(rng)
        res = canonicalize_core([core(0, y1), core(0, t * y1)])
        assert res.tag == "Gamma2"
        assert _images_match(res, [core(0, y1), core(0, t * y1)])

        # proportional rows, non-real factor
        x1, y1 = _rand_gauss(rng, nonzero=True), _rand_gauss(rng)
        t = _rand_nonreal(rng)
        res = canonicalize_core([core(x1, y1), core(t * x1, t * y1)])
        assert res.tag == "Gamma3"
        assert _images_match(res, [core(x1, y1), core(t * x1, t * y1)])

        # rank 1 with x != 0 and with x = 0
        g = core(_rand_gauss(rng, nonzero=True), _rand_gauss(rng))
        res = canonicalize_core([g])
        assert res.tag == "Gamma4"
        assert proj_eq(conjugate(res.conjugator, g), core(1, 0))

        g = core(0, _rand_gauss(rng, nonzero=True))
        res = canonicalize_core([g])
        assert res.tag == "Gamma5"
        assert proj_eq(conjugate(res.conjugator, g), core(0, 1))
    assert time.monotonic() - start < 10.0


# ---------------------------------------------------------------------------
# 3. case-table totality


def test_case_table_totality():
    start = time.monotonic()
    records = cases.all_verdicts()
    assert len(records) == 120
    kinds = [v.kind for _, v in records]
    assert set(kinds) <= {
        Verdict.DESCRIBED,
        Verdict.DISMISSED,
        Verdict.COMMUTATIVE_ONLY,
        Verdict.PURELY_PARABOLIC,
        Verdict.UNRESOLVED,
    }

    described_families = set()
    for _, v in records:
        if v.kind == Verdict.DESCRIBED:
            described_families.update(v.families)
        if v.kind == Verdict.DISMISSED and v.escape is not None:
            gamma, h = v.escape
            rep = escape_witness(gamma, h, 40)
            assert rep.verdict == "converging"
            assert rep.min_gap < 1e-6

    for fam in sorted(described_families):
        if fam == "Inoue-301-2":
            pres = cases.inoue_from_integer_matrix([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
            assert len(pres.generators) == 4
            continue
        params = cases.default_params(fam)
        g = cases.construct(fam, params)
        assert cases.validate(fam, g, context=params) is not None, fam
    assert time.monotonic() - start < 60.0


# ---------------------------------------------------------------------------
# 4. normality


def _param_sets(tag, draws=5, seed=11):
    rng = random.Random(seed)
    out = [cases.default_params(tag)]
    for _ in range(draws):
        out.append(cases.sample_params(tag, rng))
    return out


@pytest.mark.parametrize("tag", cases.FAMILY_TAGS)
def test_core_normality(tag):
    for params in _param_sets(tag):
        sub = GroupPresentation(cases.core_generators(tag, params))
        whole = cases.presentation(tag, params)
        ok, counterexample = normality_check(sub, whole, 8)
        assert ok, (tag, params, counterexample)


def test_normality_worked_instance():
    gamma = cases.construct("Gamma1-N3", {"p": 2, "q": 3})
    assert proj_eq(conjugate(gamma, core(1, 0)), core(2, -3))


# ---------------------------------------------------------------------------
# 5. rank bound


@pytest.mark.parametrize("tag", cases.FAMILY_TAGS)
def test_rank_bound(tag):
    dec = layer_decompose(cases.presentation(tag), 2)
    assert sum(dec.ranks) <= 4, (tag, dec.ranks)


def test_rank_bound_diagnostic_fires():
    import math

    gens = [
        core(complex(1), complex(0)),
        core(complex(0), complex(1)),
        core(complex(0, 1), complex(0)),
        core(complex(0), complex(0, 1)),
        core(complex(math.sqrt(2)), complex(0)),
    ]
    dec = layer_decompose(GroupPresentation(gens), 1)
    assert sum(dec.ranks) > 4
    assert dec.diagnostic is not None


# ---------------------------------------------------------------------------
# 6. commutator containment

TWO_LOXODROMIC = tuple(
    t for t in cases.FAMILY_TAGS if len(cases.loxodromic_generators(t)) >= 2
)


@pytest.mark.parametrize("tag", TWO_LOXODROMIC)
def test_commutator_containment(tag):
    vecs = []
    for g in cases.core_generators(tag):
        s = shape_of(g)
        vecs.append(_xy_vec(s.x, s.y))
    lat = lattice.reduce(vecs, 4)
    for g1, g2 in itertools.combinations(cases.loxodromic_generators(tag), 2):
        c = commutator(g1, g2)
        s = shape_of(c)
        if s.kind is ShapeKind.DIAGONAL:
            continue  # projectively trivial
        assert s.kind is ShapeKind.CORE, tag
        assert lattice.member(_xy_vec(s.x, s.y), lat) is not None, tag


# ---------------------------------------------------------------------------
# 7. type-III exclusion


def test_no_type_iii_among_family_generators():
    rng = random.Random(5)
    checked = 0
    for tag in cases.FAMILY_TAGS:
        for g in cases.loxodromic_generators(tag):
            assert classify_element(g).kind is not ElementKind.COMPLEX_HOMOTHETY_III
    while checked < 500:
        tag = cases.FAMILY_TAGS[checked % len(cases.FAMILY_TAGS)]
        params = cases.sample_params(tag, rng)
        for g in cases.loxodromic_generators(tag, params):
            assert classify_element(g).kind is not ElementKind.COMPLEX_HOMOTHETY_III, (
                tag,
                params,
            )
        checked += 1


# ---------------------------------------------------------------------------
# 8. cone invariance


@pytest.mark.parametrize("tag", cases.FAMILY_TAGS)
def test_cone_invariance(tag):
    ok, counterexample = cone_invariance_check(cases.presentation(tag), 3, 100)
    assert ok, (tag, counterexample)


# ---------------------------------------------------------------------------
# 9. integer-matrix instance


def _bisect_root(f, lo, hi, tol=1e-12):
    # independent oracle: plain bisection, no library numerics
    assert f(lo) < 0 < f(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def test_integer_matrix_instance():
    A = [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    pres = cases.inoue_from_integer_matrix(A)
    h = pres.generators[:3]
    gamma = pres.generators[3]
    for i in range(3):
        lhs = conjugate(gamma, h[i])
        rhs = ProjMatrix.identity(exact=False)
        for j in range(3):
            for _ in range(A[i][j]):
                rhs = rhs * h[j]
        assert proj_eq(lhs, rhs), i  # default tolerance 1e-9

    lam = pres.generators[3].normalize().entry(1, 1)
    root = _bisect_root(lambda t: t**3 - t - 1, 1.0, 2.0)
    assert abs(complex(lam).real - root) < 1e-8
    assert abs(complex(lam).imag) < 1e-9


# ---------------------------------------------------------------------------
# 10. brute-force ball equivalence


def _heisenberg_states(L):
    """Independent enumerator: states (a, b, c) for [[1,a,c],[0,1,b],[0,0,1]]
    under (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')."""
    letters = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]
    frontier = {(0, 0, 0)}
    seen = {(0, 0, 0)}
    for _ in range(L):
        nxt = set()
        for (a, b, c) in frontier:
            for (da, db, dc) in letters:
                s = (a + da, b + db, c + dc + a * db)
                if s not in seen:
                    seen.add(s)
                    nxt.add(s)
        frontier = nxt
    return seen


def test_heisenberg_ball_equivalence():
    p = GroupPresentation([core(1, 0), translation(0, 1)])
    elements = ball(p, 4)
    got = set()
    for w in elements:
        n = w.normalize()
        a = n.entry(1, 2)
        b = n.entry(2, 3)
        c = n.entry(1, 3)
        got.add((int(a.re), int(b.re), int(c.re)))
    expected = _heisenberg_states(4)
    assert got == expected
    assert len(got) == 135
