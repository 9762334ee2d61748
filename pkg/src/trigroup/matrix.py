"""Projective 3x3 matrix algebra over exact or float scalars.

A ``ProjMatrix`` is an invertible 3x3 matrix considered modulo nonzero scalar
multiples, i.e. an element of PSL(3,C).  The normalization rule fixes a
canonical representative without determinant-one lifts: upper-triangular
matrices are scaled so the (3,3) entry is 1 (falling back to (2,2) then (1,1)
if needed), other matrices so the first maximum-modulus entry is 1.

Besides equality / conjugation / commutators, this module computes the two
diagonal-ratio characters lambda12 = g11/g22 and lambda23 = g22/g33, the
unipotent projection pi_proj (the (2,3) entry of the normalized unipotent
representative) and the layer shape of an element:

* ``core(x, y)``        -> [[1,x,y],[0,1,0],[0,0,1]]
* ``translation(x, y)`` -> [[1,0,x],[0,1,y],[0,0,1]]
"""

from __future__ import annotations

import enum

from .scalar import (
    GaussianRational,
    TOLERANCE,
    coerce_scalar,
    is_exact,
    scalar_abs2,
    scalar_is_zero,
    scalars_equal,
)


def _entry_nonzero(v):
    """Structural nonzero test for multiply term skipping (not tolerance-aware:
    a float residue only costs an extra term, never correctness)."""
    if type(v) is GaussianRational:
        return bool(v.re) or bool(v.im)
    return v != 0


class SingularMatrixError(ValueError):
    pass


class NotTriangularError(ValueError):
    pass


class ShapeKind(enum.Enum):
    DIAGONAL = "Diagonal"
    CORE = "CoreShape"
    TRANSLATION = "TranslationShape"
    UNIPOTENT = "Unipotent"
    LAYER2 = "TriangularLayer2"
    LAYER3 = "TriangularLayer3"
    LAYER4 = "TriangularLayer4"
    NOT_UPPER_TRIANGULAR = "NotUpperTriangular"


class ShapeTag:
    """Layer shape of a projective matrix, with the core / translation data."""

    def __init__(self, kind, x=None, y=None):
        self.kind = kind
        self.x = x
        self.y = y

    def __eq__(self, other):
        if not isinstance(other, ShapeTag):
            return NotImplemented
        if self.kind != other.kind:
            return False
        for a, b in ((self.x, other.x), (self.y, other.y)):
            if (a is None) != (b is None):
                return False
            if a is not None and not scalars_equal(a, b):
                return False
        return True

    def __repr__(self):
        if self.x is None:
            return f"ShapeTag({self.kind.value})"
        return f"ShapeTag({self.kind.value}, {self.x}, {self.y})"


class ProjMatrix:
    """Invertible 3x3 matrix modulo nonzero scalars.

    Entries are all GaussianRational (exact mode) or all complex (float
    mode); mixed input is promoted to float mode.
    """

    __slots__ = ("rows", "exact", "normalized")

    def __init__(self, rows, normalized=False, _trusted=False):
        if _trusted:
            self.rows = rows
            self.exact = is_exact(rows[0][0])
            self.normalized = normalized
            return
        flat = [v for row in rows for v in row]
        if len(flat) != 9:
            raise ValueError("ProjMatrix needs 3x3 entries")
        exact = not any(isinstance(v, (float, complex)) for v in flat)
        ent = [coerce_scalar(v, exact=exact) for v in flat]
        self.rows = (tuple(ent[0:3]), tuple(ent[3:6]), tuple(ent[6:9]))
        self.exact = exact
        self.normalized = normalized
        if scalar_is_zero(self.det()):
            raise SingularMatrixError("not invertible")

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(exact=True):
        one = coerce_scalar(1, exact)
        zero = coerce_scalar(0, exact)
        return ProjMatrix(
            [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
        )

    @staticmethod
    def diag(a, b, c):
        return ProjMatrix([[a, 0, 0], [0, b, 0], [0, 0, c]])

    # -- basic queries ------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, i, j):
        """1-based entry access matching the usual matrix index notation."""
        return self.rows[i - 1][j - 1]

    def det(self):
        ((a, b, c), (d, e, f), (g, h, i)) = self.rows
        nz = _entry_nonzero
        if not (nz(d) or nz(g) or nz(h)):  # triangular fast path
            return a * e * i
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_upper_triangular(self):
        ((_, _, _), (d, _, _), (g, h, _)) = self.rows
        return (
            scalar_is_zero(d) and scalar_is_zero(g) and scalar_is_zero(h)
        )

    def diagonal(self):
        return (self.rows[0][0], self.rows[1][1], self.rows[2][2])

    def is_unipotent(self):
        """Projectively unipotent: triangular with all diagonal entries equal."""
        if not self.is_upper_triangular():
            return False
        a, b, c = self.diagonal()
        return scalars_equal(a, b) and scalars_equal(b, c)

    def is_scalar(self):
        if not self.is_upper_triangular():
            return False
        a, b, c = self.diagonal()
        return (
            scalars_equal(a, b)
            and scalars_equal(b, c)
            and all(
                scalar_is_zero(self.rows[i][j])
                for i in range(3)
                for j in range(3)
                if i != j
            )
        )

    # -- arithmetic ---------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        a, b = self.rows, other.rows
        nz = _entry_nonzero
        rows = []
        for i in range(3):
            a0, a1, a2 = a[i]
            row = []
            for j in range(3):
                # skip structurally zero terms; triangular products are the
                # common case and lose more than half of them
                acc = a0 * b[0][j] if nz(a0) and nz(b[0][j]) else None
                if nz(a1) and nz(b[1][j]):
                    t = a1 * b[1][j]
                    acc = t if acc is None else acc + t
                if nz(a2) and nz(b[2][j]):
                    t = a2 * b[2][j]
                    acc = t if acc is None else acc + t
                row.append(a0 * b[0][j] if acc is None else acc)
            rows.append(tuple(row))
        return ProjMatrix(tuple(rows), _trusted=True)

    def scaled(self, c):
        rows = tuple(tuple(v * c for v in row) for row in self.rows)
        return ProjMatrix(rows, _trusted=True)

    def inverse(self):
        d = self.det()
        if scalar_is_zero(d):
            raise SingularMatrixError("not invertible")
        ((a, b, c), (e, f, g), (h, i, j)) = self.rows
        nz = _entry_nonzero
        if not (nz(e) or nz(h) or nz(i)):
            # triangular fast path: the inverse is triangular as well
            zero = a - a
            cof = (
                (f * j, -(b * j), b * g - c * f),
                (zero, a * j, -(a * g)),
                (zero, zero, a * f),
            )
        else:
            cof = (
                (f * j - g * i, c * i - b * j, b * g - c * f),
                (g * h - e * j, a * j - c * h, c * e - a * g),
                (e * i - f * h, b * h - a * i, a * f - b * e),
            )
        rows = tuple(tuple(v / d for v in row) for row in cof)
        return ProjMatrix(rows, _trusted=True)

    def __pow__(self, n):
        if n == 0:
            return ProjMatrix.identity(self.exact)
        if n < 0:
            return self.inverse() ** (-n)
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            base = base * base
            n >>= 1
        return out

    # -- normalization and equality -----------------------------------

    def _pivot(self):
        """Entry the normalization divides by."""
        if self.is_upper_triangular():
            for i in (2, 1, 0):
                if not scalar_is_zero(self.rows[i][i]):
                    return self.rows[i][i]
        best = None
        for row in self.rows:
            for v in row:
                if best is None or scalar_abs2(v) > scalar_abs2(best):
                    best = v
        return best

    def normalize(self):
        if self.normalized:
            return self
        p = self._pivot()
        rows = tuple(tuple(v / p for v in row) for row in self.rows)
        m = ProjMatrix(rows, normalized=True, _trusted=True)
        return m

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(v) for v in row) for row in self.rows
        )
        return f"ProjMatrix[{body}]"

    def key(self, digits=9):
        """Hashable key identifying the projective class.

        Exact mode keys are exact; float mode rounds the normalized entries
        to ``digits`` decimals.
        """
        n = self.normalize()
        if n.exact:
            return tuple((v.re, v.im) for row in n.rows for v in row)
        return tuple(
            (round(v.real, digits) + 0.0, round(v.imag, digits) + 0.0)
            for row in n.rows
            for v in row
        )


def identity(exact=True):
    return ProjMatrix.identity(exact)


def core(x, y):
    """The core element g_{x,y} = [[1,x,y],[0,1,0],[0,0,1]]."""
    return ProjMatrix([[1, x, y], [0, 1, 0], [0, 0, 1]])


def translation(x, y):
    """The translation h_{x,y} = [[1,0,x],[0,1,y],[0,0,1]]."""
    return ProjMatrix([[1, 0, x], [0, 1, y], [0, 0, 1]])


def proj_eq(g, h, tol=None):
    """Projective equality: g = c*h for some nonzero scalar c."""
    # anchor at g's largest entry to make the float comparison stable
    gi = gj = 0
    best = None
    for i in range(3):
        for j in range(3):
            a2 = scalar_abs2(g.rows[i][j])
            if best is None or a2 > best:
                best, gi, gj = a2, i, j
    hv = h.rows[gi][gj]
    gv = g.rows[gi][gj]
    if scalar_is_zero(hv):
        return False
    c = gv / hv
    for i in range(3):
        for j in range(3):
            if not scalars_equal(g.rows[i][j], h.rows[i][j] * c, tol=tol):
                return False
    return True


def conjugate(a, g):
    """a * g * a^{-1}, normalized."""
    return (a * g * a.inverse()).normalize()


def commutator(g, h):
    """g * h * g^{-1} * h^{-1}, normalized."""
    return (g * h * g.inverse() * h.inverse()).normalize()


def _require_triangular(g):
    if not g.is_upper_triangular():
        raise NotTriangularError("requires upper triangular")
    for i in range(3):
        if scalar_is_zero(g.rows[i][i]):
            raise NotTriangularError("requires nonzero diagonal")


def lambda12(g):
    """The character g11/g22 on upper-triangular matrices."""
    _require_triangular(g)
    return g.rows[0][0] / g.rows[1][1]


def lambda23(g):
    """The character g22/g33 on upper-triangular matrices."""
    _require_triangular(g)
    return g.rows[1][1] / g.rows[2][2]


def pi_proj(g):
    """(2,3) entry of the normalized unipotent representative."""
    if not g.is_unipotent():
        raise NotTriangularError("requires a unipotent matrix")
    n = g.normalize()
    return n.rows[1][2]


def shape_of(g):
    """Layer shape per the four-layer decomposition, on the normalized rep."""
    if not g.is_upper_triangular():
        return ShapeTag(ShapeKind.NOT_UPPER_TRIANGULAR)
    n = g.normalize()
    l23 = n.rows[1][1] / n.rows[2][2]
    if not scalars_equal(l23, coerce_scalar(1, is_exact(l23))):
        return ShapeTag(ShapeKind.LAYER4)
    l12 = n.rows[0][0] / n.rows[1][1]
    if not scalars_equal(l12, coerce_scalar(1, is_exact(l12))):
        return ShapeTag(ShapeKind.LAYER3)
    # unipotent from here on; rescale so the diagonal is exactly 1
    d = n.rows[1][1]
    x = n.rows[0][1] / d
    y = n.rows[0][2] / d
    z = n.rows[1][2] / d
    if scalar_is_zero(z):
        if scalar_is_zero(x) and scalar_is_zero(y):
            return ShapeTag(ShapeKind.DIAGONAL)
        return ShapeTag(ShapeKind.CORE, x, y)
    if scalar_is_zero(x):
        return ShapeTag(ShapeKind.TRANSLATION, y, z)
    return ShapeTag(ShapeKind.LAYER2, x, y)
