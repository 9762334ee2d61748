"""Rank-profile catalog and loxodromic extension families.

The catalog enumerates the twenty admissible rank profiles (k, m, n) =
(rank of the parabolic part, rank of the third layer, rank of the fourth
layer) and stores a compiled verdict for every profile x parabolic-form
combination: which combinations are realized by an explicit generator
family, which are dismissed (with a non-discreteness escape instance when
the dismissal argument produces one), which collapse to commutative or
purely parabolic groups, and which remain unresolved.

Constructors build the printed generator of each family from validated
parameters; validators run the reverse extraction and name every violated
constraint.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .classify import ElementKind, classify_element
from .matrix import ProjMatrix, core, lambda12, lambda23, translation
from .scalar import (
    GaussianRational,
    TOLERANCE,
    coerce_scalar,
    is_exact,
    scalar_is_zero,
    scalars_equal,
)
from .witness import GroupPresentation

PAIR_SEARCH_BOUND = 100


class CaseConstraintError(ValueError):
    """A family parameter violates a printed constraint."""


class CaseId:
    def __init__(self, k, m, n, j):
        self.k = k
        self.m = m
        self.n = n
        self.j = j

    @property
    def label(self):
        return f"{self.k}{self.m}{self.n}"

    def __repr__(self):
        return f"CaseId({self.label}({self.j}))"

    def __eq__(self, other):
        if not isinstance(other, CaseId):
            return NotImplemented
        return (self.k, self.m, self.n, self.j) == (
            other.k,
            other.m,
            other.n,
            other.j,
        )

    def __hash__(self):
        return hash((self.k, self.m, self.n, self.j))


TABLE_LABELS = [
    "400", "310", "301", "300", "220", "211", "210",
    "202", "201", "200", "130", "121", "120", "112",
    "111", "110", "103", "102", "101", "100",
]


def table_cases():
    """The twenty rank profiles, decoded from their three-digit labels."""
    return [tuple(int(c) for c in label) for label in TABLE_LABELS]


def case_triple(label):
    if label not in TABLE_LABELS:
        raise ValueError(f"unknown case label {label!r}")
    return tuple(int(c) for c in label)


class Verdict:
    DESCRIBED = "described"
    DISMISSED = "dismissed"
    COMMUTATIVE_ONLY = "commutative-only"
    PURELY_PARABOLIC = "purely-parabolic"
    UNRESOLVED = "unresolved"

    def __init__(self, kind, families=(), anchor="", escape=None, note=""):
        self.kind = kind
        self.families = tuple(families)
        self.anchor = anchor
        self.escape = escape  # optional (gamma, h) escape instance
        self.note = note
        if kind == self.DESCRIBED and not self.families:
            raise ValueError("described verdict needs at least one family")

    def __repr__(self):
        extra = f", families={list(self.families)}" if self.families else ""
        return f"Verdict({self.kind}{extra})"


def _escape_translation_layer3():
    # conjugation contracts the (1,3) entry of a translation by a factor 8
    gamma = ProjMatrix([[Fraction(1, 4), 0, 0], [0, 2, 1], [0, 0, 2]])
    return gamma, translation(1, 1)


def _escape_translation_layer4():
    # diagonal with lambda23 = 1/4 contracts h_{0,y} toward the identity
    gamma = ProjMatrix.diag(1, Fraction(1, 2), 2)
    return gamma, translation(0, 1)


# family tags grouped by the canonical core group they extend
_J4_FAMILIES = {
    (2, 2, 0): ("Gamma1-N3-second",),
    (2, 1, 0): ("Gamma1-N3", "Gamma2-N3"),
    (2, 0, 2): ("Gamma3-N4-second",),
    (2, 0, 1): ("Gamma1-N4", "Gamma2-N4", "Gamma3-N4"),
    (1, 1, 0): ("Gamma5-N3",),
    (1, 0, 3): ("Gamma4-N4-third",),
    (1, 0, 2): ("Gamma4-N4-second", "Gamma5-N4-second"),
    (1, 0, 1): ("Gamma4-N4", "Gamma5-N4"),
}


def admissibility(c: CaseId) -> Verdict:
    """Compiled verdict for a rank profile with parabolic part of type j."""
    if c.label not in TABLE_LABELS:
        raise ValueError(f"unknown case label {c.label!r}")
    if c.j not in range(1, 7):
        raise ValueError("parabolic form index must be 1..6")
    k, m, n, j = c.k, c.m, c.n, c.j

    # structural rank constraints of the parabolic forms come first
    if j == 4 and k > 2:
        return Verdict(
            Verdict.DISMISSED,
            anchor="core families have rank at most 2",
        )
    if j == 5 and k != 3:
        return Verdict(
            Verdict.DISMISSED,
            anchor="the rank-3 non-commutative family forces k = 3",
        )
    if j == 6 and k < 3:
        return Verdict(
            Verdict.DISMISSED,
            anchor="the a,b,c non-commutative family has rank 3 or 4",
        )

    if m == 0 and n == 0:
        return Verdict(
            Verdict.PURELY_PARABOLIC,
            anchor="no third or fourth layer: handled by the parabolic theory",
        )

    if j == 1:
        return Verdict(
            Verdict.COMMUTATIVE_ONLY,
            anchor="lambda23 of infinite order forces the whole group commutative",
        )

    if j == 2:
        if m > 0:
            return Verdict(
                Verdict.DISMISSED,
                anchor="a third-layer element contracts translations: "
                "h_{x,y} conjugates toward h_{0,y}",
                escape=_escape_translation_layer3(),
            )
        # m = 0, n > 0
        if (k, n) == (3, 1):
            return Verdict(
                Verdict.DESCRIBED,
                families=("Inoue-301-2",),
                anchor="integer-matrix eigenvector construction "
                "(fundamental group of an Inoue surface)",
            )
        if k == 2:
            return Verdict(
                Verdict.UNRESOLVED,
                anchor="no argument covers translation groups of rank 2 "
                "with a fourth layer",
            )
        if k == 1 and n <= 2:
            return Verdict(
                Verdict.DESCRIBED,
                families=("Gamma5-N4",) if n == 1 else ("Gamma5-N4-second",),
                anchor="only the single-translation subcase h_{x,0} survives; "
                "it matches the rank-1 core families",
                note="valid only when the translation group is <h_{x,0}>",
            )
        return Verdict(
            Verdict.DISMISSED,
            anchor="fourth-layer conjugation contracts h_{0,y}; no rank-3 "
            "fourth layer over a single translation",
            escape=_escape_translation_layer4(),
        )

    if j == 3:
        return Verdict(
            Verdict.DISMISSED,
            anchor="the quadratic (1,3) entry is incompatible with any "
            "loxodromic conjugation",
        )

    if j == 4:
        fams = _J4_FAMILIES.get((k, m, n))
        if fams:
            return Verdict(
                Verdict.DESCRIBED,
                families=fams,
                anchor="explicit loxodromic generator families over the "
                "canonical core groups",
            )
        return Verdict(
            Verdict.DISMISSED,
            anchor="no core family admits this third/fourth layer profile",
        )

    # j in (5, 6): k = 3 (or 4) with a nontrivial loxodromic layer
    return Verdict(
        Verdict.DISMISSED,
        anchor="non-commutative parabolic parts admit no loxodromic elements",
    )


def all_verdicts():
    """The full compiled table: one record per (profile, j)."""
    out = []
    for (k, m, n) in table_cases():
        for j in range(1, 7):
            out.append((CaseId(k, m, n, j), admissibility(CaseId(k, m, n, j))))
    return out


# ---------------------------------------------------------------------------
# parameter plumbing


def _as_scalar(v, exact=True):
    if isinstance(v, (complex, float)):
        return complex(v)
    return coerce_scalar(v, exact)


def _as_int(v, tol=1e-9):
    """Integer value of v, or None."""
    if isinstance(v, bool):
        return None
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else None
    if isinstance(v, GaussianRational):
        if v.im != 0:
            return None
        return _as_int(v.re)
    c = complex(v)
    if abs(c.imag) > tol:
        return None
    r = round(c.real)
    return r if abs(c.real - r) <= tol * max(1.0, abs(c.real)) else None


def _nonreal(v):
    if is_exact(v):
        return v.im != 0
    return abs(complex(v).imag) > 1e-9


def _unit_modulus(v):
    if is_exact(v):
        return v.abs2() == 1
    return abs(abs(complex(v)) - 1.0) <= 1e-9


def _require(cond, name, diags):
    if not cond:
        diags.append(name)
    return cond


def _loxodromic(g):
    return classify_element(g).is_loxodromic()


# ---------------------------------------------------------------------------
# family registry

FAMILY_TAGS = (
    "Gamma1-N3",
    "Gamma1-N3-second",
    "Gamma1-N4",
    "Gamma2-N3",
    "Gamma2-N4",
    "Gamma3-N4",
    "Gamma3-N4-second",
    "Gamma4-N4",
    "Gamma4-N4-second",
    "Gamma4-N4-third",
    "Gamma5-N3",
    "Gamma5-N4",
    "Gamma5-N4-second",
)

DEFAULTS = {
    "Gamma1-N3": {"p": 2, "q": 3, "gamma12": 0, "gamma13": 0},
    "Gamma1-N3-second": {"p1": 2, "q1": 1, "p2": 2, "q2": 1, "j": 3, "m": 6},
    "Gamma1-N4": {"p": 2, "q": 3, "r": 1, "gamma12": 0, "gamma13": 0},
    "Gamma2-N3": {
        "y": GaussianRational(0, 1), "p": 1, "q": 1,
        "gamma12": 0, "gamma13": 0, "gamma23": 1,
    },
    "Gamma2-N4": {
        "alpha": 1, "y": GaussianRational(0, 1), "p": 1, "q": 1,
        "gamma12": 0, "gamma13": 0, "gamma23": 0,
    },
    "Gamma3-N4": {
        "x": GaussianRational(0, 1), "p": 1, "q": 1, "beta": 1,
        "gamma12": 0, "gamma13": 0,
    },
    "Gamma3-N4-second": {
        "x": GaussianRational(0, 1), "p1": 1, "q1": 1, "beta1": 1,
        "p2": 1, "q2": 1, "beta2": 1, "n": 2, "m": 2,
    },
    "Gamma4-N4": {"p": 2, "alpha": 2, "gamma12": 0, "gamma13": 0},
    "Gamma4-N4-second": {
        "p": 2, "alpha": 2, "q": 3, "beta": 1, "j": 1, "mu13": 0,
    },
    "Gamma4-N4-third": {
        "p": 2, "alpha": 2, "gamma12": 0, "gamma13": 0,
        "q": 3, "beta": 1, "j": 4, "mu13": 0,
        "r": 2, "delta": 1, "j2": 0, "n": 58,
    },
    "Gamma5-N3": {"p": 2, "gamma12": 0, "gamma13": 0, "gamma23": 1},
    "Gamma5-N4": {"alpha": 1, "p": 2, "gamma12": 0, "gamma13": 0, "gamma23": 0},
    "Gamma5-N4-second": {"alpha": 1, "p": 2, "beta": 1, "q": 3, "j": 1},
}


def default_params(tag):
    if tag not in DEFAULTS:
        raise ValueError(f"unknown family {tag!r}")
    return dict(DEFAULTS[tag])


def _merged(tag, params):
    out = default_params(tag)
    if params:
        out.update(params)
    return out


def core_generators(tag, params=None):
    """Generators of the parabolic core the family extends."""
    p = _merged(tag, params)
    if tag.startswith("Gamma1"):
        return [core(1, 0), core(0, 1)]
    if tag.startswith("Gamma2"):
        return [core(0, 1), core(0, p["y"])]
    if tag.startswith("Gamma3"):
        return [core(1, 0), core(p["x"], 0)]
    if tag.startswith("Gamma4"):
        return [core(1, 0)]
    if tag.startswith("Gamma5"):
        return [core(0, 1)]
    raise ValueError(f"unknown family {tag!r}")


# -- constructors -----------------------------------------------------------


def _check_int(v, name, exclude=()):
    n = _as_int(v)
    if n is None or n in exclude:
        raise CaseConstraintError(f"{name} must be an integer outside {set(exclude)}")
    return n


def construct(tag, params=None):
    """The family's printed generator matrix for the given parameters.

    Raises CaseConstraintError naming the violated constraint.  Free
    entries default to 0.
    """
    p = _merged(tag, params)
    builder = _BUILDERS[tag]
    return builder(p)


def loxodromic_generators(tag, params=None):
    """Every loxodromic generator of the extended group (in layer order)."""
    p = _merged(tag, params)
    if tag == "Gamma1-N3-second":
        gamma = ProjMatrix(
            [[p["p1"], 0, 0], [0, 1, Fraction(p["q1"], p["p1"])], [0, 0, 1]]
        )
        return [gamma, construct(tag, p)]
    if tag == "Gamma3-N4-second":
        gamma = construct(
            "Gamma3-N4",
            {"x": p["x"], "p": p["p1"], "q": p["q1"], "beta": p["beta1"]},
        )
        return [gamma, construct(tag, p)]
    if tag == "Gamma4-N4-second":
        gamma = construct(
            "Gamma4-N4", {"p": p["p"], "alpha": p["alpha"]}
        )
        return [gamma, construct(tag, p)]
    if tag == "Gamma4-N4-third":
        gamma = construct(
            "Gamma4-N4",
            {
                "p": p["p"], "alpha": p["alpha"],
                "gamma12": p["gamma12"], "gamma13": p["gamma13"],
            },
        )
        mu = construct(
            "Gamma4-N4-second",
            {
                "p": p["p"], "alpha": p["alpha"], "q": p["q"],
                "beta": p["beta"], "j": p["j"], "mu13": p["mu13"],
            },
        )
        return [gamma, mu, construct(tag, p)]
    if tag == "Gamma5-N4-second":
        gamma = construct(
            "Gamma5-N4", {"alpha": p["alpha"], "p": p["p"]}
        )
        return [gamma, construct(tag, p)]
    return [construct(tag, p)]


def presentation(tag, params=None):
    """Core generators plus the family's loxodromic generators."""
    p = _merged(tag, params)
    gens = core_generators(tag, p) + loxodromic_generators(tag, p)
    labels = [f"c{i+1}" for i in range(len(core_generators(tag, p)))] + [
        f"l{i+1}" for i in range(len(loxodromic_generators(tag, p)))
    ]
    return GroupPresentation(gens, labels)


def _build_gamma1_n3(p):
    pp = _check_int(p["p"], "p", exclude=(-1, 0, 1))
    q = _check_int(p["q"], "q", exclude=(0,))
    return ProjMatrix(
        [[pp, p["gamma12"], p["gamma13"]], [0, 1, Fraction(q, pp)], [0, 0, 1]]
    )


def gamma1_pair_search(p1, q1, p2, q2, bound=PAIR_SEARCH_BOUND):
    """Bounded search for (j, m) satisfying the second-generator divisibility.

    Returns the first (j, m) with 0 < |j|, |m| <= bound whose formulas give
    nonzero rational entries, or None.
    """
    d = p1 * p2 + p1 * q2
    if d == 0 or p1 * q2 + p2 * q1 == 0:
        return None
    for j in range(1, bound + 1):
        for sj in (j, -j):
            for m in range(1, bound + 1):
                for sm in (m, -m):
                    if (sm + sj * p1 * p2) % d:
                        continue
                    if (sm * p1 * q2 - sj * p1 * p2 * p2 * q1) % d:
                        continue
                    mu12, mu13 = _gamma1_mu(p1, q1, p2, q2, sj, sm)
                    if mu12 != 0 and mu13 != 0:
                        return sj, sm
    return None


def _gamma1_mu(p1, q1, p2, q2, j, m):
    den = p1 * q2 + p2 * q1
    mu12 = Fraction(-p1 * p2 * (m + j * p1 * p2), (1 - p1) * den)
    mu13 = Fraction(
        p2 * (m * q1 + j * p1 * p1 * (p2 * q1 - (1 - p1) * q2)),
        (1 - p1) ** 2 * den,
    )
    return mu12, mu13


def _build_gamma1_n3_second(p):
    p1 = _check_int(p["p1"], "p1", exclude=(-1, 0, 1))
    p2 = _check_int(p["p2"], "p2", exclude=(-1, 0, 1))
    q1 = _check_int(p["q1"], "q1", exclude=(0,))
    q2 = _check_int(p["q2"], "q2", exclude=(0,))
    j = _check_int(p["j"], "j")
    m = _check_int(p["m"], "m")
    d = p1 * p2 + p1 * q2
    if d == 0:
        raise CaseConstraintError("p1*p2 + p1*q2 must be nonzero")
    if (m + j * p1 * p2) % d:
        raise CaseConstraintError("p1*p2+p1*q2 must divide m + j*p1*p2")
    if (m * p1 * q2 - j * p1 * p2 * p2 * q1) % d:
        raise CaseConstraintError(
            "p1*p2+p1*q2 must divide m*p1*q2 - j*p1*p2^2*q1"
        )
    mu12, mu13 = _gamma1_mu(p1, q1, p2, q2, j, m)
    if mu12 == 0 or mu13 == 0:
        raise CaseConstraintError("mu12 and mu13 must be nonzero")
    return ProjMatrix(
        [[p2, mu12, mu13], [0, 1, Fraction(q2, p2)], [0, 0, 1]]
    )


def _build_gamma1_n4(p):
    pp = _check_int(p["p"], "p", exclude=(0,))
    q = _check_int(p["q"], "q", exclude=(0,))
    r = _check_int(p["r"], "r")
    g = ProjMatrix(
        [[pp * q, p["gamma12"], p["gamma13"]], [0, q, r], [0, 0, pp]]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _zpq(p, q, y):
    return _as_scalar(p, is_exact(y)) + q * y


def _build_gamma2_n3(p):
    pp = _check_int(p["p"], "p")
    q = _check_int(p["q"], "q")
    if pp == 0 and q == 0:
        raise CaseConstraintError("|p| + |q| must be nonzero")
    y = p["y"]
    if not _nonreal(y):
        raise CaseConstraintError("y must be non-real")
    z = _zpq(pp, q, y)
    if _unit_modulus(z):
        raise CaseConstraintError("|p + q*y| must differ from 1")
    if scalar_is_zero(_as_scalar(p["gamma23"], is_exact(y))):
        raise CaseConstraintError("gamma23 must be nonzero")
    return ProjMatrix(
        [[z, p["gamma12"], p["gamma13"]], [0, 1, p["gamma23"]], [0, 0, 1]]
    )


def _build_gamma2_n4(p):
    pp = _check_int(p["p"], "p")
    q = _check_int(p["q"], "q")
    if pp == 0 and q == 0:
        raise CaseConstraintError("|p| + |q| must be nonzero")
    y = p["y"]
    if not _nonreal(y):
        raise CaseConstraintError("y must be non-real")
    z = _zpq(pp, q, y)
    alpha = _as_scalar(p["alpha"], is_exact(y))
    g = ProjMatrix(
        [
            [alpha, p["gamma12"], p["gamma13"]],
            [0, z / alpha**2, p["gamma23"]],
            [0, 0, alpha / z],
        ]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _gamma3_integrality(pp, q, x):
    if is_exact(x):
        ok1 = (Fraction(pp) - q * x.abs2()).denominator == 1
        ok2 = (Fraction(pp + q) + 2 * q * x.re).denominator == 1
        return ok1, ok2
    z = complex(x)
    ok1 = _as_int(pp - q * abs(z) ** 2) is not None
    ok2 = _as_int(pp + q + 2 * q * z.real) is not None
    return ok1, ok2


def _build_gamma3_n4(p):
    pp = _check_int(p["p"], "p")
    q = _check_int(p["q"], "q")
    if pp == 0 and q == 0:
        raise CaseConstraintError("|p| + |q| must be nonzero")
    x = p["x"]
    if not _nonreal(x):
        raise CaseConstraintError("x must be non-real")
    ok1, ok2 = _gamma3_integrality(pp, q, x)
    if not ok1:
        raise CaseConstraintError("p - q*|x|^2 must be an integer")
    if not ok2:
        raise CaseConstraintError("p + q + 2*q*Re(x) must be an integer")
    z = _zpq(pp, q, x)
    beta = _as_scalar(p["beta"], is_exact(x))
    g = ProjMatrix(
        [
            [z, p["gamma12"], p["gamma13"]],
            [0, 1, 0],
            [0, 0, 1 / (z * beta**3)],
        ]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _in_z_plus_zx(v, x):
    """Decompose v = k1 + k2*x with integers k1, k2, or None."""
    if is_exact(v) and is_exact(x):
        if x.im == 0:
            return None
        k2 = v.im / x.im
        k1 = v.re - k2 * x.re
        if k1.denominator == 1 and k2.denominator == 1:
            return int(k1), int(k2)
        return None
    v, x = complex(v), complex(x)
    if abs(x.imag) < 1e-12:
        return None
    k2 = v.imag / x.imag
    k1 = v.real - k2 * x.real
    i1, i2 = _as_int(k1), _as_int(k2)
    if i1 is None or i2 is None:
        return None
    return i1, i2


def _build_gamma3_n4_second(p):
    x = p["x"]
    p1 = _check_int(p["p1"], "p1")
    q1 = _check_int(p["q1"], "q1")
    p2 = _check_int(p["p2"], "p2")
    q2 = _check_int(p["q2"], "q2")
    if p2 == 0 and q2 == 0:
        raise CaseConstraintError("|p2| + |q2| must be nonzero")
    ok1, ok2 = _gamma3_integrality(p2, q2, x)
    if not (ok1 and ok2):
        raise CaseConstraintError("p2, q2 must satisfy the integrality pair")
    n = _check_int(p["n"], "n")
    m = _check_int(p["m"], "m")
    one = _as_scalar(1, is_exact(x))
    z1 = _zpq(p1, q1, x)
    z2 = _zpq(p2, q2, x)
    mu12 = (n + m * x - (x + one) * z2) / (one - z1)
    cond = mu12 * (z1 - one) / (z1 * z2)
    if _in_z_plus_zx(cond, x) is None:
        raise CaseConstraintError(
            "mu12*(p1+q1*x-1)/((p1+q1*x)(p2+q2*x)) must lie in Z + Z*x"
        )
    beta2 = _as_scalar(p["beta2"], is_exact(x))
    g = ProjMatrix(
        [[z2, mu12, 0], [0, 1, 0], [0, 0, 1 / (z2 * beta2**3)]]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _build_gamma4_n4(p):
    pp = _check_int(p["p"], "p", exclude=(0, 1))
    alpha = _as_scalar(p["alpha"], not isinstance(p["alpha"], (float, complex)))
    if _unit_modulus(alpha):
        raise CaseConstraintError("|alpha| must differ from 1")
    g = ProjMatrix(
        [
            [pp * alpha, p["gamma12"], p["gamma13"]],
            [0, alpha, 0],
            [0, 0, 1 / (pp * alpha**2)],
        ]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _build_gamma4_n4_second(p):
    pp = _check_int(p["p"], "p", exclude=(0, 1))
    q = _check_int(p["q"], "q", exclude=(0,))
    j = _check_int(p["j"], "j")
    alpha = _as_scalar(p["alpha"], not isinstance(p["alpha"], (float, complex)))
    beta = _as_scalar(p["beta"], not isinstance(p["beta"], (float, complex)))
    homothety = scalars_equal(pp * pp * alpha**3, _as_scalar(1, is_exact(alpha)))
    mu13 = p["mu13"]
    if not homothety and not scalar_is_zero(_as_scalar(mu13, is_exact(beta))):
        raise CaseConstraintError("mu13 must vanish unless p^2*alpha^3 = 1")
    mu12 = beta * j * pp * q / (1 - pp)
    g = ProjMatrix(
        [[q * beta, mu12, mu13], [0, beta, 0], [0, 0, 1 / (q * beta**2)]]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _build_gamma4_n4_third(p):
    pp = _check_int(p["p"], "p", exclude=(0, 1))
    q = _check_int(p["q"], "q", exclude=(0,))
    j = _check_int(p["j"], "j")
    j2 = _check_int(p["j2"], "j2")
    n = _check_int(p["n"], "n")
    r = _check_int(p["r"], "r", exclude=(-1, 0, 1))
    exact = not any(
        isinstance(p[k], (float, complex))
        for k in ("alpha", "beta", "delta", "gamma12", "gamma13", "mu13")
    )
    alpha = _as_scalar(p["alpha"], exact)
    beta = _as_scalar(p["beta"], exact)
    delta = _as_scalar(p["delta"], exact)
    gamma12 = _as_scalar(p["gamma12"], exact)
    gamma13 = _as_scalar(p["gamma13"], exact)
    mu13 = _as_scalar(p["mu13"], exact)
    one = _as_scalar(1, exact)
    if scalars_equal(r * delta**3, one):
        raise CaseConstraintError("r*delta^3 must differ from 1")
    den13 = r * delta**2 * (one - pp * pp * q * q * alpha**3 * beta**3)
    if scalar_is_zero(den13):
        raise CaseConstraintError("p^2*q^2*alpha^3*beta^3 must differ from 1")
    eta13 = (
        pp
        * alpha**2
        * (
            gamma13 * (one - r * r * delta**3)
            - pp * q * alpha * beta**2 * mu13 * (one + r * r * delta**3)
        )
        / den13
    )
    kden = pp * r * alpha * (1 - pp * q)
    if scalar_is_zero(kden):
        raise CaseConstraintError("p*q must differ from 1")
    kval = (
        (1 - pp) * (alpha * (n + r) - gamma12 * (one - r))
        - j2 * pp * pp * q * alpha * (one - r)
    ) / kden
    k = _as_int(kval)
    if k is None:
        raise CaseConstraintError("k must come out an integer")
    lhs = k * r * (1 - q)
    rhs = j * q * (1 - r)
    if lhs != rhs:
        d = q * r * (1 - pp)
        if d == 0 or (pp * (lhs - rhs)) % d:
            raise CaseConstraintError(
                "need k*r*(1-q) = j*q*(1-r) or divisibility by q*r*(1-p)"
            )
    eta12 = delta * k * pp * r / (1 - pp)
    g = ProjMatrix(
        [[r * delta, eta12, eta13], [0, delta, 0], [0, 0, 1 / (q * delta**2)]]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _build_gamma5_n3(p):
    pp = _check_int(p["p"], "p", exclude=(-1, 0, 1))
    exact = not isinstance(p["gamma23"], (float, complex))
    if scalar_is_zero(_as_scalar(p["gamma23"], exact)):
        raise CaseConstraintError("gamma23 must be nonzero")
    return ProjMatrix(
        [[pp, p["gamma12"], p["gamma13"]], [0, 1, p["gamma23"]], [0, 0, 1]]
    )


def _build_gamma5_n4(p):
    pp = _check_int(p["p"], "p", exclude=(0,))
    exact = not isinstance(p["alpha"], (float, complex))
    alpha = _as_scalar(p["alpha"], exact)
    if scalars_equal(_as_scalar(pp * pp, exact), alpha**3):
        raise CaseConstraintError("p^2 must differ from alpha^3")
    g = ProjMatrix(
        [
            [alpha, p["gamma12"], p["gamma13"]],
            [0, pp / alpha**2, p["gamma23"]],
            [0, 0, alpha / pp],
        ]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


def _build_gamma5_n4_second(p):
    pp = _check_int(p["p"], "p", exclude=(0, 1))
    q = _check_int(p["q"], "q", exclude=(0,))
    j = _check_int(p["j"], "j", exclude=(0,))
    exact = not isinstance(p["beta"], (float, complex))
    beta = _as_scalar(p["beta"], exact)
    if scalars_equal(_as_scalar(q * q, exact), beta**3):
        raise CaseConstraintError("q^2 must differ from beta^3")
    mu13 = j * pp * beta / (1 - pp)
    g = ProjMatrix(
        [[beta, 0, mu13], [0, q / beta**2, 0], [0, 0, beta / q]]
    )
    if not _loxodromic(g):
        raise CaseConstraintError("generator must be loxodromic")
    return g


_BUILDERS = {
    "Gamma1-N3": _build_gamma1_n3,
    "Gamma1-N3-second": _build_gamma1_n3_second,
    "Gamma1-N4": _build_gamma1_n4,
    "Gamma2-N3": _build_gamma2_n3,
    "Gamma2-N4": _build_gamma2_n4,
    "Gamma3-N4": _build_gamma3_n4,
    "Gamma3-N4-second": _build_gamma3_n4_second,
    "Gamma4-N4": _build_gamma4_n4,
    "Gamma4-N4-second": _build_gamma4_n4_second,
    "Gamma4-N4-third": _build_gamma4_n4_third,
    "Gamma5-N3": _build_gamma5_n3,
    "Gamma5-N4": _build_gamma5_n4,
    "Gamma5-N4-second": _build_gamma5_n4_second,
}


# -- validators -------------------------------------------------------------


def validate(tag, g, context=None):
    """Extract and check family parameters from a matrix; None if invalid."""
    params, _ = validate_report(tag, g, context)
    return params


def validate_report(tag, g, context=None):
    """As validate, but also returns the list of violated constraints."""
    if tag not in _VALIDATORS:
        raise ValueError(f"unknown family {tag!r}")
    diags = []
    params = _VALIDATORS[tag](g, dict(context or {}), diags)
    if diags:
        return None, diags
    return params, []


def _validate_gamma1_n3(g, ctx, diags):
    n = g.normalize()
    p = _as_int(n.entry(1, 1))
    _require(p is not None and p not in (-1, 0, 1), "p in Z minus {-1,0,1}", diags)
    _require(scalars_equal(n.entry(2, 2), _one_like(n)), "unit (2,2) entry", diags)
    q = None
    if p is not None:
        q = _as_int(n.entry(2, 3) * p)
        _require(q is not None and q != 0, "q = p*(2,3) a nonzero integer", diags)
    if diags:
        return None
    return {
        "p": p, "q": q,
        "gamma12": n.entry(1, 2), "gamma13": n.entry(1, 3),
    }


def _one_like(n):
    return coerce_scalar(1, n.exact)


def _validate_gamma1_n3_second(g, ctx, diags):
    base = _validate_gamma1_n3(g, ctx, diags)
    if base is None:
        return None
    p2, q2 = base["p"], base["q"]
    p1 = ctx.get("p1")
    q1 = ctx.get("q1")
    if p1 is None or q1 is None:
        diags.append("context must provide p1, q1")
        return None
    n = g.normalize()
    mu12 = _as_rational(n.entry(1, 2))
    mu13 = _as_rational(n.entry(1, 3))
    if not _require(
        mu12 is not None and mu13 is not None and mu12 != 0 and mu13 != 0,
        "mu12, mu13 nonzero rationals",
        diags,
    ):
        return None
    jm = _solve_gamma1_jm(p1, q1, p2, q2, mu12, mu13)
    if not _require(jm is not None, "mu entries must match the j,m formulas", diags):
        return None
    j, m = jm
    d = p1 * p2 + p1 * q2
    _require((m + j * p1 * p2) % d == 0, "divisibility of m + j*p1*p2", diags)
    _require(
        (m * p1 * q2 - j * p1 * p2 * p2 * q1) % d == 0,
        "divisibility of m*p1*q2 - j*p1*p2^2*q1",
        diags,
    )
    if diags:
        return None
    return {"p1": p1, "q1": q1, "p2": p2, "q2": q2, "j": j, "m": m}


def _as_rational(v, tol=1e-9):
    if is_exact(v):
        return v.re if v.im == 0 else None
    c = complex(v)
    if abs(c.imag) > tol:
        return None
    f = Fraction(c.real).limit_denominator(10**6)
    return f if abs(float(f) - c.real) <= tol * max(1.0, abs(c.real)) else None


def _solve_gamma1_jm(p1, q1, p2, q2, mu12, mu13):
    den = p1 * q2 + p2 * q1
    if den == 0:
        return None
    s1 = -mu12 * (1 - p1) * den / (p1 * p2)  # = m + j*p1*p2
    s2 = mu13 * (1 - p1) ** 2 * den / p2  # = m*q1 + j*p1^2*(p2*q1-(1-p1)*q2)
    a = p1 * p1 * (p2 * q1 - (1 - p1) * q2) - q1 * p1 * p2
    if a == 0:
        return None
    j = (s2 - q1 * s1) / a
    m = s1 - j * p1 * p2
    if j.denominator != 1 or m.denominator != 1:
        return None
    return int(j), int(m)


def _validate_gamma1_n4(g, ctx, diags):
    p = _as_int(lambda12(g))
    q = None
    r = None
    _require(p is not None and p != 0, "p = lambda12 a nonzero integer", diags)
    if p is not None and p != 0:
        q = _as_int(lambda23(g) * p)
        _require(q is not None and q != 0, "q = p*lambda23 a nonzero integer", diags)
        rv = g.entry(2, 3) / g.entry(3, 3) * p
        r = _as_int(rv)
        _require(r is not None, "r an integer", diags)
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"p": p, "q": q, "r": r}


def _validate_gamma2_n3(g, ctx, diags):
    y = ctx.get("y")
    if y is None:
        diags.append("context must provide y")
        return None
    n = g.normalize()
    _require(scalars_equal(n.entry(2, 2), _one_like(n)), "unit (2,2) entry", diags)
    z = n.entry(1, 1)
    pq = _in_z_plus_zx(z, y)
    if not _require(pq is not None, "(1,1) entry must equal p + q*y", diags):
        return None
    p, q = pq
    _require(not (p == 0 and q == 0), "|p| + |q| nonzero", diags)
    _require(not _unit_modulus(z), "|p + q*y| differs from 1", diags)
    _require(not scalar_is_zero(n.entry(2, 3)), "gamma23 nonzero", diags)
    if diags:
        return None
    return {"y": y, "p": p, "q": q, "gamma23": n.entry(2, 3)}


def _validate_gamma2_n4(g, ctx, diags):
    y = ctx.get("y")
    if y is None:
        diags.append("context must provide y")
        return None
    z = lambda12(g) * lambda23(g)
    pq = _in_z_plus_zx(z, y)
    if not _require(pq is not None, "lambda12*lambda23 must equal p + q*y", diags):
        return None
    p, q = pq
    _require(not (p == 0 and q == 0), "|p| + |q| nonzero", diags)
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"y": y, "p": p, "q": q, "alpha_cubed": lambda12(g) * z}


def _validate_gamma3_n4(g, ctx, diags):
    x = ctx.get("x")
    if x is None:
        diags.append("context must provide x")
        return None
    z = lambda12(g)
    pq = _in_z_plus_zx(z, x)
    if not _require(pq is not None, "lambda12 must equal p + q*x", diags):
        return None
    p, q = pq
    _require(not (p == 0 and q == 0), "|p| + |q| nonzero", diags)
    ok1, ok2 = _gamma3_integrality(p, q, x)
    _require(ok1, "p - q*|x|^2 an integer", diags)
    _require(ok2, "p + q + 2*q*Re(x) an integer", diags)
    _require(scalar_is_zero(g.entry(2, 3)), "(2,3) entry zero", diags)
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    beta_cubed = lambda23(g) / z
    return {"x": x, "p": p, "q": q, "beta_cubed": beta_cubed}


def _validate_gamma3_n4_second(g, ctx, diags):
    base = _validate_gamma3_n4(g, ctx, diags)
    if base is None:
        return None
    x = base["x"]
    p1, q1 = ctx.get("p1"), ctx.get("q1")
    if p1 is None or q1 is None:
        diags.append("context must provide p1, q1")
        return None
    n = g.normalize()
    scale = n.entry(2, 2)
    mu12 = n.entry(1, 2) / scale
    _require(scalar_is_zero(n.entry(1, 3)), "(1,3) entry zero", diags)
    one = _as_scalar(1, is_exact(mu12))
    z1 = _zpq(p1, q1, x)
    z2 = _zpq(base["p"], base["q"], x)
    cond = mu12 * (z1 - one) / (z1 * z2)
    kk = _in_z_plus_zx(cond, x)
    _require(kk is not None, "commutator condition lands in Z + Z*x", diags)
    if diags:
        return None
    base.update({"p1": p1, "q1": q1, "mu12": mu12, "k1": kk[0], "k2": kk[1]})
    return base


def _validate_gamma4_n4(g, ctx, diags):
    p = _as_int(lambda12(g))
    _require(p is not None and p not in (0, 1), "p = lambda12 in Z minus {0,1}", diags)
    _require(scalar_is_zero(g.entry(2, 3)), "(2,3) entry zero", diags)
    alpha_cubed = None
    if p not in (None, 0):
        alpha_cubed = lambda23(g) / p
        if is_exact(alpha_cubed):
            _require(alpha_cubed.abs2() != 1, "|alpha| differs from 1", diags)
        else:
            _require(
                abs(abs(complex(alpha_cubed)) - 1.0) > 1e-9,
                "|alpha| differs from 1",
                diags,
            )
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"p": p, "alpha_cubed": alpha_cubed}


def _validate_gamma4_n4_second(g, ctx, diags):
    p = ctx.get("p")
    if p is None:
        diags.append("context must provide p")
        return None
    q = _as_int(lambda12(g))
    _require(q is not None and q != 0, "q = lambda12 a nonzero integer", diags)
    _require(scalar_is_zero(g.entry(2, 3)), "(2,3) entry zero", diags)
    j = None
    if q not in (None, 0):
        jv = g.entry(1, 2) / g.entry(2, 2) * (1 - p) / (p * q)
        j = _as_int(jv)
        _require(j is not None, "j an integer", diags)
    homothety = False
    ac = ctx.get("alpha_cubed")
    if ac is not None:
        homothety = scalars_equal(p * p * ac, _as_scalar(1, is_exact(ac)))
    if not homothety:
        _require(
            scalar_is_zero(g.entry(1, 3)),
            "mu13 vanishes unless p^2*alpha^3 = 1",
            diags,
        )
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    out = {"p": p, "q": q, "j": j, "beta_cubed": lambda23(g) / q}
    if not scalar_is_zero(g.entry(1, 3)):
        out["mu13"] = g.entry(1, 3) / g.entry(2, 2)
    return out


def _validate_gamma4_n4_third(g, ctx, diags):
    p, q, j = ctx.get("p"), ctx.get("q"), ctx.get("j")
    if p is None or q is None or j is None:
        diags.append("context must provide p, q, j")
        return None
    r = _as_int(lambda12(g))
    _require(
        r is not None and r not in (-1, 0, 1), "r = lambda12 in Z minus {-1,0,1}", diags
    )
    _require(scalar_is_zero(g.entry(2, 3)), "(2,3) entry zero", diags)
    k = None
    if r not in (None, 0):
        kv = g.entry(1, 2) / g.entry(2, 2) * (1 - p) / (p * r)
        k = _as_int(kv)
        _require(k is not None, "k an integer", diags)
        # delta^3 recovered through the printed (3,3) entry q^-1 delta^-2
        delta_cubed = lambda23(g) / q
        _require(
            not scalars_equal(
                r * delta_cubed,
                _as_scalar(1, is_exact(delta_cubed)) if is_exact(delta_cubed) else complex(1),
            ),
            "r*delta^3 differs from 1",
            diags,
        )
    if k is not None:
        lhs = k * r * (1 - q)
        rhs = j * q * (1 - r)
        if lhs != rhs:
            d = q * r * (1 - p)
            _require(
                d != 0 and (p * (lhs - rhs)) % d == 0,
                "k*r*(1-q) = j*q*(1-r) or divisibility by q*r*(1-p)",
                diags,
            )
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"p": p, "q": q, "j": j, "r": r, "k": k}


def _validate_gamma5_n3(g, ctx, diags):
    n = g.normalize()
    p = _as_int(n.entry(1, 1))
    _require(p is not None and p not in (-1, 0, 1), "p in Z minus {-1,0,1}", diags)
    _require(scalars_equal(n.entry(2, 2), _one_like(n)), "unit (2,2) entry", diags)
    _require(not scalar_is_zero(n.entry(2, 3)), "gamma23 nonzero", diags)
    if diags:
        return None
    return {"p": p, "gamma23": n.entry(2, 3)}


def _validate_gamma5_n4(g, ctx, diags):
    p = _as_int(lambda12(g) * lambda23(g))
    _require(p is not None and p != 0, "p = lambda12*lambda23 a nonzero integer", diags)
    alpha_cubed = None
    if p not in (None, 0):
        alpha_cubed = lambda12(g) * p
        _require(
            not scalars_equal(
                _as_scalar(p * p, is_exact(alpha_cubed)) if is_exact(alpha_cubed) else complex(p * p),
                alpha_cubed,
            ),
            "p^2 differs from alpha^3",
            diags,
        )
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"p": p, "alpha_cubed": alpha_cubed}


def _validate_gamma5_n4_second(g, ctx, diags):
    p = ctx.get("p")
    if p is None:
        diags.append("context must provide p")
        return None
    q = _as_int(lambda12(g) * lambda23(g))
    _require(q is not None and q != 0, "q = lambda12*lambda23 a nonzero integer", diags)
    _require(scalar_is_zero(g.entry(1, 2)), "(1,2) entry zero", diags)
    _require(scalar_is_zero(g.entry(2, 3)), "(2,3) entry zero", diags)
    beta_cubed = None
    j = None
    if q not in (None, 0):
        beta_cubed = lambda12(g) * q
        _require(
            not scalars_equal(
                _as_scalar(q * q, is_exact(beta_cubed)) if is_exact(beta_cubed) else complex(q * q),
                beta_cubed,
            ),
            "q^2 differs from beta^3",
            diags,
        )
        jv = g.entry(1, 3) / g.entry(1, 1) * (1 - p) / p
        j = _as_int(jv)
        _require(j is not None and j != 0, "j a nonzero integer", diags)
    _require(_loxodromic(g), "loxodromic", diags)
    if diags:
        return None
    return {"p": p, "q": q, "j": j, "beta_cubed": beta_cubed}


_VALIDATORS = {
    "Gamma1-N3": _validate_gamma1_n3,
    "Gamma1-N3-second": _validate_gamma1_n3_second,
    "Gamma1-N4": _validate_gamma1_n4,
    "Gamma2-N3": _validate_gamma2_n3,
    "Gamma2-N4": _validate_gamma2_n4,
    "Gamma3-N4": _validate_gamma3_n4,
    "Gamma3-N4-second": _validate_gamma3_n4_second,
    "Gamma4-N4": _validate_gamma4_n4,
    "Gamma4-N4-second": _validate_gamma4_n4_second,
    "Gamma4-N4-third": _validate_gamma4_n4_third,
    "Gamma5-N3": _validate_gamma5_n3,
    "Gamma5-N4": _validate_gamma5_n4,
    "Gamma5-N4-second": _validate_gamma5_n4_second,
}


# -- random parameter draws --------------------------------------------------


def sample_params(tag, rng):
    """A random valid parameter set for the family (rng: random.Random)."""
    for _ in range(200):
        try:
            params = _SAMPLERS[tag](rng)
            construct(tag, params)
            return params
        except CaseConstraintError:
            continue
    raise CaseConstraintError(f"no valid random draw found for {tag}")


def _gauss_int(rng, lo=-2, hi=2, nonreal=False):
    while True:
        re = rng.randint(lo, hi)
        im = rng.randint(lo, hi)
        if nonreal and im == 0:
            continue
        return GaussianRational(re, im)


def _sample_gamma1_n3(rng):
    return {
        "p": rng.choice([2, 3, -2, -3, 4]),
        "q": rng.choice([1, 2, -1, -2, 3]),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
    }


def _sample_gamma1_n3_second(rng):
    p1 = rng.choice([2, 3, -2])
    p2 = rng.choice([2, 3, -2])
    q1 = rng.choice([1, 2])
    q2 = rng.choice([1, 2])
    jm = gamma1_pair_search(p1, q1, p2, q2)
    if jm is None:
        raise CaseConstraintError("no (j, m) within bounds")
    return {"p1": p1, "q1": q1, "p2": p2, "q2": q2, "j": jm[0], "m": jm[1]}


def _sample_gamma1_n4(rng):
    return {
        "p": rng.choice([2, 3, -2]),
        "q": rng.choice([2, 3, -3]),
        "r": rng.randint(-2, 2),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
    }


def _sample_gamma2_n3(rng):
    return {
        "y": _gauss_int(rng, -1, 2, nonreal=True),
        "p": rng.randint(-2, 2),
        "q": rng.randint(-2, 2),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
        "gamma23": rng.choice([1, 2, GaussianRational(0, 1)]),
    }


def _sample_gamma2_n4(rng):
    return {
        "alpha": rng.choice([1, 2, GaussianRational(1, 1)]),
        "y": _gauss_int(rng, -1, 2, nonreal=True),
        "p": rng.randint(-2, 2),
        "q": rng.randint(-2, 2),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
        "gamma23": 0,
    }


def _sample_gamma3_n4(rng):
    return {
        "x": _gauss_int(rng, -1, 2, nonreal=True),
        "p": rng.randint(-2, 2),
        "q": rng.randint(-2, 2),
        "beta": rng.choice([1, 2]),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
    }


def _sample_gamma3_n4_second(rng):
    x = GaussianRational(0, 1)
    return {
        "x": x,
        "p1": 1, "q1": 1, "beta1": rng.choice([1, 2]),
        "p2": rng.choice([1, 2]), "q2": 1, "beta2": rng.choice([1, 2]),
        "n": rng.randint(-6, 6), "m": rng.randint(-6, 6),
    }


def _sample_gamma4_n4(rng):
    return {
        "p": rng.choice([2, 3, -2]),
        "alpha": rng.choice([2, 3, GaussianRational(1, 1)]),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
    }


def _sample_gamma4_n4_second(rng):
    return {
        "p": rng.choice([2, 3, -2]),
        "alpha": rng.choice([2, 3]),
        "q": rng.choice([2, 3, -2]),
        "beta": rng.choice([1, 2]),
        "j": rng.randint(1, 3),
        "mu13": 0,
    }


def _sample_gamma4_n4_third(rng):
    p = 2
    alpha = rng.choice([2, 3])
    q = 3
    beta = 1
    j = rng.randint(1, 6)
    for r in (2, -2, 3):
        for j2 in range(-4, 5):
            for n in range(-PAIR_SEARCH_BOUND, PAIR_SEARCH_BOUND + 1):
                params = {
                    "p": p, "alpha": alpha, "gamma12": 0, "gamma13": 0,
                    "q": q, "beta": beta, "j": j, "mu13": 0,
                    "r": r, "delta": 1, "j2": j2, "n": n,
                }
                try:
                    construct("Gamma4-N4-third", params)
                    return params
                except CaseConstraintError:
                    continue
    raise CaseConstraintError("no valid third-generator draw found")


def _sample_gamma5_n3(rng):
    return {
        "p": rng.choice([2, 3, -2, -3]),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
        "gamma23": rng.choice([1, 2, GaussianRational(0, 1)]),
    }


def _sample_gamma5_n4(rng):
    return {
        "alpha": rng.choice([1, 2]),
        "p": rng.choice([2, 3, -2]),
        "gamma12": _gauss_int(rng),
        "gamma13": _gauss_int(rng),
        "gamma23": _gauss_int(rng),
    }


def _sample_gamma5_n4_second(rng):
    return {
        "alpha": rng.choice([1, 2]),
        "p": rng.choice([2, 3, -2]),
        "beta": rng.choice([1, 2]),
        "q": rng.choice([3, -2, 2]),
        "j": rng.randint(1, 3),
    }


_SAMPLERS = {
    "Gamma1-N3": _sample_gamma1_n3,
    "Gamma1-N3-second": _sample_gamma1_n3_second,
    "Gamma1-N4": _sample_gamma1_n4,
    "Gamma2-N3": _sample_gamma2_n3,
    "Gamma2-N4": _sample_gamma2_n4,
    "Gamma3-N4": _sample_gamma3_n4,
    "Gamma3-N4-second": _sample_gamma3_n4_second,
    "Gamma4-N4": _sample_gamma4_n4,
    "Gamma4-N4-second": _sample_gamma4_n4_second,
    "Gamma4-N4-third": _sample_gamma4_n4_third,
    "Gamma5-N3": _sample_gamma5_n3,
    "Gamma5-N4": _sample_gamma5_n4,
    "Gamma5-N4-second": _sample_gamma5_n4_second,
}


# ---------------------------------------------------------------------------
# the translation-lattice construction from an integer matrix


def inoue_from_integer_matrix(A):
    """Translation group plus diagonal loxodromic from an integer matrix.

    A must be an integer 3x3 matrix with determinant 1, one real eigenvalue
    greater than 1 and a complex-conjugate pair.  The generators are the
    translations h_{x_i, y_i} built from the real and complex eigenvectors
    and the diagonal Diag(l_R, l_C, 1).  Float mode only.
    """
    import numpy as np

    M = np.array(A, dtype=float)
    if M.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    if not np.allclose(M, np.round(M)):
        raise ValueError("expected integer entries")
    if abs(np.linalg.det(M) - 1.0) > 1e-9:
        raise ValueError("determinant must be 1")
    vals, vecs = np.linalg.eig(M)
    real_idx = [i for i in range(3) if abs(vals[i].imag) < 1e-9]
    cplx_idx = [i for i in range(3) if abs(vals[i].imag) >= 1e-9]
    if len(real_idx) != 1 or len(cplx_idx) != 2:
        raise ValueError("eigenvalue pattern mismatch: alpha*beta^2 not in R violated")
    lam_r = vals[real_idx[0]].real
    if lam_r <= 1.0:
        raise ValueError("eigenvalue pattern mismatch: need a real eigenvalue > 1")
    lam_c = vals[cplx_idx[0]]
    x = vecs[:, real_idx[0]].real
    y = vecs[:, cplx_idx[0]]
    gens = [translation(complex(x[i]), complex(y[i])) for i in range(3)]
    gamma = ProjMatrix([[complex(lam_r), 0, 0], [0, lam_c, 0], [0, 0, complex(1.0)]])
    return GroupPresentation(gens + [gamma], ["h1", "h2", "h3", "gamma"])
