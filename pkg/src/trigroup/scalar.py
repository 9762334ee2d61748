"""Scalar arithmetic: exact Gaussian rationals and tolerance-aware complex floats.

Every module works over one of two scalar substrates:

* exact mode -- ``GaussianRational``, a pair of ``fractions.Fraction`` values
  (real and imaginary part), always stored reduced.
* float mode -- the builtin ``complex``, compared through the module-wide
  tolerance policy.

Mixed-mode binary operations promote exact values to ``complex``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class Tolerance:
    """Comparison policy for float-mode scalars.

    Relative tolerance with an absolute floor; a single shared instance
    (``TOLERANCE``) routes every float comparison in the package so tests can
    tighten or relax it in one place.
    """

    def __init__(self, rel=1e-9, abs_floor=1e-12):
        self.rel = rel
        self.abs_floor = abs_floor

    def close(self, a, b):
        a = complex(a)
        b = complex(b)
        return abs(a - b) <= max(self.abs_floor, self.rel * max(abs(a), abs(b)))

    def is_zero(self, a):
        return abs(complex(a)) <= self.abs_floor


TOLERANCE = Tolerance()


class GaussianRational:
    """A complex number a + b*i with rational a, b, stored reduced.

    Arithmetic between two GaussianRational values (or with ints / Fractions)
    stays exact; arithmetic with floats or complex promotes to complex.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        # arithmetic results arrive as Fractions already; skip re-wrapping
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_value(v):
        """Coerce v (int, Fraction, GaussianRational) to GaussianRational."""
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, Rational):
            return GaussianRational(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to GaussianRational")

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    def is_one(self):
        return self.re == 1 and self.im == 0

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, Rational):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) - other
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return other - complex(self)
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other
        # real factors are the common case; skip the cross terms
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re, self.im)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other
        if not o.im:
            if not o.re:
                raise ZeroDivisionError("division by zero GaussianRational")
            if not self.re and not self.im:
                return self
            return GaussianRational(self.re / o.re, self.im / o.re)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / complex(self)
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("exponent must be int")
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def abs2(self):
        """Exact squared modulus, a Fraction."""
        return self.re * self.re + self.im * self.im

    # -- comparisons and conversions ----------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == complex(other)
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


QQi = GaussianRational  # short alias used heavily in tests

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def is_exact(x):
    return isinstance(x, GaussianRational)


def coerce_scalar(v, exact=True):
    """Coerce a value to the requested arithmetic mode."""
    if exact:
        return GaussianRational.from_value(v)
    return complex(v)


def scalars_equal(a, b, tol=None):
    """Mode-aware equality: exact if both operands are exact, else tolerant."""
    if is_exact(a) and is_exact(b):
        return a == b
    return (tol or TOLERANCE).close(complex(a), complex(b))


def scalar_is_zero(a, tol=None):
    if is_exact(a):
        return a.is_zero()
    return (tol or TOLERANCE).is_zero(a)


def scalar_abs2(a):
    """Squared modulus; exact Fraction for exact input, float otherwise."""
    if is_exact(a):
        return a.abs2()
    c = complex(a)
    return c.real * c.real + c.imag * c.imag
