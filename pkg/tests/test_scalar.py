import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trigroup.scalar import (
    GaussianRational,
    TOLERANCE,
    coerce_scalar,
    is_exact,
    scalar_abs2,
    scalar_is_zero,
    scalars_equal,
)


def rationals(max_den=20, max_num=20):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def gaussians():
    return st.builds(GaussianRational, rationals(), rationals())


def nonzero_gaussians():
    return gaussians().filter(lambda z: not z.is_zero())


class TestArithmetic:
    def test_basic_ops(self):
        a = GaussianRational(1, 2)
        b = GaussianRational(Fraction(1, 2), -1)
        assert a + b == GaussianRational(Fraction(3, 2), 1)
        assert a - b == GaussianRational(Fraction(1, 2), 3)
        # (1+2i)(1/2 - i) = 1/2 - i + i - 2i^2 = 5/2
        assert a * b == GaussianRational(Fraction(5, 2), 0)

    def test_division_inverse(self):
        a = GaussianRational(3, -4)
        assert a / a == GaussianRational(1)
        inv = GaussianRational(1) / a
        assert a * inv == GaussianRational(1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)

    def test_abs2(self):
        assert GaussianRational(3, 4).abs2() == 25
        assert GaussianRational(Fraction(1, 2)).abs2() == Fraction(1, 4)

    def test_pow(self):
        i = GaussianRational(0, 1)
        assert i**2 == GaussianRational(-1)
        assert i**4 == GaussianRational(1)
        assert i**-1 == GaussianRational(0, -1)

    def test_int_interop(self):
        a = GaussianRational(1, 1)
        assert 2 * a == GaussianRational(2, 2)
        assert a + 1 == GaussianRational(2, 1)
        assert 1 - a == GaussianRational(0, -1)

    def test_complex_conversion(self):
        z = complex(GaussianRational(Fraction(1, 4), -2))
        assert z == 0.25 - 2j

    @given(gaussians(), gaussians(), gaussians())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a

    @given(nonzero_gaussians())
    def test_field_inverse(self, a):
        assert a * (GaussianRational(1) / a) == GaussianRational(1)

    @given(gaussians())
    def test_abs2_matches_complex(self, a):
        assert math.isclose(float(a.abs2()), abs(complex(a)) ** 2, rel_tol=1e-9, abs_tol=1e-12)


class TestHelpers:
    def test_is_exact(self):
        assert is_exact(GaussianRational(1))
        assert not is_exact(1.0 + 0j)

    def test_coerce(self):
        assert coerce_scalar(Fraction(1, 2), True) == GaussianRational(Fraction(1, 2))
        assert isinstance(coerce_scalar(2, False), complex)

    def test_scalars_equal_mixed(self):
        assert scalars_equal(GaussianRational(Fraction(1, 2)), complex(0.5))
        assert not scalars_equal(GaussianRational(1), complex(2.0))

    def test_zero_tolerance(self):
        assert scalar_is_zero(complex(1e-15))
        assert not scalar_is_zero(complex(1e-3))
        assert scalar_is_zero(GaussianRational(0))
        assert not scalar_is_zero(GaussianRational(Fraction(1, 10**12)))

    def test_tolerance_policy(self):
        assert TOLERANCE.close(1.0, 1.0 + 1e-12)
        assert not TOLERANCE.close(1.0, 1.001)

    def test_abs2_float(self):
        assert math.isclose(scalar_abs2(3 + 4j), 25.0)
