"""Eigenvalue classification of upper-triangular projective transformations.

The taxonomy is the elliptic / parabolic / loxodromic trichotomy with the
loxodromic refinements: loxoparabolic, complex homothety (type I or III),
rational or irrational screw, strongly loxodromic.  Inputs are restricted to
upper-triangular matrices so the eigenvalues are the diagonal entries;
callers must triangularize general matrices themselves.

Moduli are compared after projective normalization by the geometric mean,
which avoids any root extraction: |l_i| equals the geometric mean iff
|l_i|^6 = |l_1 l_2 l_3|^2, an exact rational test in exact mode.
"""

from __future__ import annotations

import cmath
import enum
import math
from fractions import Fraction

from .matrix import NotTriangularError, ProjMatrix, proj_eq
from .scalar import (
    GaussianRational,
    TOLERANCE,
    is_exact,
    scalar_abs2,
    scalar_is_zero,
    scalars_equal,
)

#: largest root-of-unity order probed by direct powering (exact mode)
ROOT_OF_UNITY_ORDER_BOUND = 360
#: continued-fraction denominator bound for float-mode screw detection
SCREW_DENOMINATOR_BOUND = 10**6


class ElementKind(enum.Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    LOXOPARABOLIC = "Loxoparabolic"
    COMPLEX_HOMOTHETY_I = "ComplexHomothetyI"
    COMPLEX_HOMOTHETY_III = "ComplexHomothetyIII"
    RATIONAL_SCREW = "RationalScrew"
    IRRATIONAL_SCREW = "IrrationalScrew"
    STRONGLY_LOXODROMIC = "StronglyLoxodromic"


LOXODROMIC_KINDS = frozenset(
    {
        ElementKind.LOXOPARABOLIC,
        ElementKind.COMPLEX_HOMOTHETY_I,
        ElementKind.COMPLEX_HOMOTHETY_III,
        ElementKind.RATIONAL_SCREW,
        ElementKind.IRRATIONAL_SCREW,
        ElementKind.STRONGLY_LOXODROMIC,
    }
)


class ElementClass:
    """Classification result; ``lam`` carries the homothety parameter."""

    def __init__(self, kind, lam=None, eigenvalues=None):
        self.kind = kind
        self.lam = lam
        self.eigenvalues = eigenvalues

    def is_loxodromic(self):
        return self.kind in LOXODROMIC_KINDS

    def is_parabolic(self):
        return self.kind is ElementKind.PARABOLIC

    def __eq__(self, other):
        if not isinstance(other, ElementClass):
            return NotImplemented
        return self.kind == other.kind

    def __repr__(self):
        if self.lam is not None:
            return f"ElementClass({self.kind.value}, lam={self.lam})"
        return f"ElementClass({self.kind.value})"


def _rank(mat, exact):
    """Rank of a 3x3 matrix given as nested lists of scalars."""
    rows = [list(r) for r in mat]
    rank = 0
    col = 0
    while rank < 3 and col < 3:
        piv = None
        for i in range(rank, 3):
            v = rows[i][col]
            if not scalar_is_zero(v):
                if piv is None or scalar_abs2(v) > scalar_abs2(rows[piv][col]):
                    piv = i
                    if exact:
                        break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, 3):
            f = rows[i][col] / pv
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def _is_diagonalizable(g, eigvals):
    """Diagonalizability via rank(g - l*I) for each repeated eigenvalue l."""
    seen = []
    for lam in eigvals:
        mult = sum(1 for m in eigvals if scalars_equal(m, lam))
        if mult == 1:
            continue
        if any(scalars_equal(lam, s) for s in seen):
            continue
        seen.append(lam)
        mat = [
            [
                g.rows[i][j] - (lam if i == j else 0 * lam)
                for j in range(3)
            ]
            for i in range(3)
        ]
        if _rank(mat, g.exact) != 3 - mult:
            return False
    return True


def _ratio_is_root_of_unity(ratio):
    """Order of the unit-modulus ratio if it is a root of unity, else None.

    Exact mode: direct powering up to order 4 — the only roots of unity in
    the Gaussian rationals are the fourth roots, so this is exhaustive and
    avoids powering arbitrary unit-modulus ratios to high exponents.  Float
    mode: continued-fraction detection of the rotation number with a
    denominator bound, confirmed by powering.
    """
    if is_exact(ratio):
        acc = GaussianRational(1)
        for n in range(1, 5):
            acc = acc * ratio
            if acc.is_one():
                return n
        return None
    x = cmath.phase(complex(ratio)) / (2 * math.pi)
    frac = Fraction(x).limit_denominator(SCREW_DENOMINATOR_BOUND)
    q = frac.denominator
    if abs(x - float(frac)) > 1e-9:
        return None
    if TOLERANCE.close(complex(ratio) ** q, 1.0):
        return q
    return None


def classify_element(g: ProjMatrix) -> ElementClass:
    """Classify an upper-triangular projective transformation.

    Raises NotTriangularError on non-triangular input.
    """
    if not g.is_upper_triangular():
        raise NotTriangularError("requires upper triangular")
    n = g.normalize()
    eig = list(n.diagonal())
    if any(scalar_is_zero(v) for v in eig):
        raise NotTriangularError("requires nonzero diagonal")
    result = _classify_normalized(n, eig)
    result.eigenvalues = eig
    return result


def _classify_normalized(n, eig):
    a2 = [scalar_abs2(v) for v in eig]
    prod2 = a2[0] * a2[1] * a2[2]

    def mod_eq(i, j):
        if n.exact:
            return a2[i] == a2[j]
        return TOLERANCE.close(math.sqrt(a2[i]), math.sqrt(a2[j]))

    all_equal = mod_eq(0, 1) and mod_eq(1, 2)
    if all_equal:
        if n.is_scalar():
            return ElementClass(ElementKind.IDENTITY)
        if _is_diagonalizable(n, eig):
            return ElementClass(ElementKind.ELLIPTIC)
        return ElementClass(ElementKind.PARABOLIC)

    # loxodromic: find the modulus pattern
    pairs = [(0, 1), (1, 2), (0, 2)]
    equal_pair = None
    for (i, j) in pairs:
        if mod_eq(i, j):
            equal_pair = (i, j)
            break
    if equal_pair is None:
        return ElementClass(ElementKind.STRONGLY_LOXODROMIC)

    i, j = equal_pair
    li, lj = eig[i], eig[j]
    if scalars_equal(li, lj):
        # repeated eigenvalue with distinct third modulus
        if not _is_diagonalizable(n, eig):
            return ElementClass(ElementKind.LOXOPARABOLIC, lam=li)
        # complex homothety; type decided by the position of the odd entry
        odd = ({0, 1, 2} - {i, j}).pop()
        if odd == 0:
            return ElementClass(ElementKind.COMPLEX_HOMOTHETY_I, lam=li)
        if odd == 2:
            return ElementClass(ElementKind.COMPLEX_HOMOTHETY_III, lam=li)
        # odd eigenvalue in the middle slot: conventionally type I
        return ElementClass(ElementKind.COMPLEX_HOMOTHETY_I, lam=li)
    ratio = li / lj
    if _ratio_is_root_of_unity(ratio) is not None:
        return ElementClass(ElementKind.RATIONAL_SCREW)
    return ElementClass(ElementKind.IRRATIONAL_SCREW)


def is_torsion(g: ProjMatrix, order_bound: int):
    """Smallest n <= order_bound with g^n projectively trivial, or None."""
    if order_bound < 1:
        raise ValueError("order_bound must be >= 1")
    ident = ProjMatrix.identity(g.exact)
    acc = g
    for n in range(1, order_bound + 1):
        if proj_eq(acc, ident):
            return n
        acc = acc * g
    return None
