from fractions import Fraction

import pytest

from trigroup import cases, witness
from trigroup.matrix import ProjMatrix, core, proj_eq, translation
from trigroup.witness import (
    GroupPresentation,
    WitnessError,
    ball,
    cone_invariance_check,
    core_extract,
    escape_witness,
    layer_decompose,
    normality_check,
)


class TestBall:
    def test_cyclic_radius_three(self):
        p = GroupPresentation([core(1, 0)])
        b = ball(p, 3)
        assert len(b) == 7
        expected = [core(x, 0) for x in (-3, -2, -1, 0, 1, 2, 3)]
        for e in expected:
            assert any(proj_eq(e, w) for w in b)

    def test_contains_identity_and_inverses(self):
        p = GroupPresentation([core(1, 0), translation(0, 1)])
        b = ball(p, 3)
        keys = {w.key() for w in b}
        assert ProjMatrix.identity().key() in keys
        for w in b:
            assert w.inverse().normalize().key() in keys

    def test_monotone_in_radius(self):
        p = GroupPresentation([core(1, 0), core(0, 1)])
        assert len(ball(p, 1)) <= len(ball(p, 2)) <= len(ball(p, 3))

    def test_radius_cap(self):
        with pytest.raises(WitnessError):
            ball(GroupPresentation([core(1, 0)]), 9)

    def test_deterministic_order(self):
        p = GroupPresentation([core(1, 0), translation(0, 1)])
        k1 = [w.key() for w in ball(p, 3)]
        k2 = [w.key() for w in ball(p, 3)]
        assert k1 == k2


class TestLayers:
    def test_core_extract_rank(self):
        p = GroupPresentation([core(1, 0), core(0, 1)])
        lat = core_extract(p, 2)
        assert lat.rank == 2

    def test_decompose_spec_example(self):
        p = GroupPresentation([core(1, 0), core(0, 1), ProjMatrix.diag(6, 3, 2)])
        dec = layer_decompose(p, 2)
        assert dec.ranks == (2, 0, 0, 1)
        assert dec.diagnostic is None

    def test_single_core_generator(self):
        dec = layer_decompose(GroupPresentation([core(1, 0)]), 2)
        assert dec.ranks == (1, 0, 0, 0)

    def test_layer3_counted(self):
        gamma = cases.construct("Gamma1-N3", {"p": 2, "q": 3})
        p = GroupPresentation([core(1, 0), core(0, 1), gamma])
        assert layer_decompose(p, 2).ranks == (2, 0, 1, 0)

    def test_rank_bound_diagnostic(self):
        import math

        gens = [
            core(complex(1), complex(0)),
            core(complex(0), complex(1)),
            core(complex(0, 1), complex(0)),
            core(complex(0), complex(0, 1)),
            core(complex(math.sqrt(2)), complex(0)),
        ]
        dec = layer_decompose(GroupPresentation(gens[:4] + [gens[4]]), 1)
        assert sum(dec.ranks) > 4
        assert dec.diagnostic is not None
        assert "rank bound" in dec.diagnostic


class TestNormality:
    def test_gamma1_worked_instance(self):
        gamma = cases.construct("Gamma1-N3", {"p": 2, "q": 3})
        sub = GroupPresentation([core(1, 0), core(0, 1)])
        whole = GroupPresentation([core(1, 0), core(0, 1), gamma])
        ok, cx = normality_check(sub, whole, 4)
        assert ok and cx is None

    def test_gamma5_n4_instance(self):
        gamma = cases.construct("Gamma5-N4", {"alpha": 1, "p": 2})
        sub = GroupPresentation([core(0, 1)])
        whole = GroupPresentation([core(0, 1), gamma])
        ok, _ = normality_check(sub, whole, 4)
        assert ok

    def test_counterexample_reported(self):
        sub = GroupPresentation([core(1, 0)])
        layer2 = ProjMatrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
        whole = GroupPresentation([core(1, 0), layer2])
        ok, cx = normality_check(sub, whole, 3)
        assert not ok
        w, s = cx
        assert proj_eq(w, layer2) or proj_eq(w, layer2.inverse())

    def test_membership_unavailable(self):
        sub = GroupPresentation([ProjMatrix.diag(6, 3, 2)])
        whole = GroupPresentation([ProjMatrix.diag(6, 3, 2)])
        with pytest.raises(WitnessError):
            normality_check(sub, whole, 2)


class TestEscape:
    def test_contracting_diagonal_converges(self):
        gamma = ProjMatrix.diag(1, Fraction(1, 2), 2)
        rep = escape_witness(gamma, translation(0, 1), 40)
        assert rep.verdict == "converging"
        assert rep.min_gap < 1e-6

    def test_commuting_pair_inconclusive(self):
        rep = escape_witness(ProjMatrix.diag(1, 2, 4), ProjMatrix.diag(1, 3, 9), 20)
        assert rep.verdict == "inconclusive"

    def test_translation_contraction_instance(self):
        gamma = ProjMatrix([[Fraction(1, 4), 0, 0], [0, 2, 1], [0, 0, 2]])
        rep = escape_witness(gamma, translation(1, 1), 40)
        assert rep.verdict == "converging"

    def test_step_cap(self):
        with pytest.raises(WitnessError):
            escape_witness(ProjMatrix.diag(1, 2, 4), core(1, 0), 300)


class TestCone:
    def test_core_with_gamma1_n3(self):
        gamma = cases.construct("Gamma1-N3", {"p": 2, "q": 3})
        p = GroupPresentation([core(1, 0), core(0, 1), gamma])
        ok, cx = cone_invariance_check(p, 3, 25)
        assert ok, cx

    def test_pure_core(self):
        p = GroupPresentation([core(1, 0), core(0, 1)])
        ok, _ = cone_invariance_check(p, 3, 25)
        assert ok

    def test_lower_triangular_breaks_flag(self):
        bad = ProjMatrix([[1, 0, 0], [0, 1, 0], [1, 0, 1]])
        p = GroupPresentation([core(1, 0), bad])
        ok, cx = cone_invariance_check(p, 2, 10)
        assert not ok
        assert cx["reason"] == "e1 not fixed"
