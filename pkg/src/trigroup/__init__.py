"""Discrete triangular subgroups of the projective group of the plane.

Exact (Gaussian-rational) and floating-point arithmetic for classifying
triangular projective transformations, recognizing the parabolic normal
forms, canonicalizing core groups, enumerating the admissible rank
profiles with their loxodromic extension families, and running word-ball
witness checks (normality, rank bound, invariant cone, escape sequences).
"""

from .classify import ElementClass, ElementKind, classify_element, is_torsion
from .matrix import (
    NotTriangularError,
    ProjMatrix,
    ShapeKind,
    commutator,
    conjugate,
    core,
    lambda12,
    lambda23,
    proj_eq,
    shape_of,
    translation,
)
from .parabolic import canonicalize_core, recognize_form
from .scalar import GaussianRational
from .witness import GroupPresentation, ball, escape_witness, layer_decompose

__all__ = [
    "ElementClass",
    "ElementKind",
    "GaussianRational",
    "GroupPresentation",
    "NotTriangularError",
    "ProjMatrix",
    "ShapeKind",
    "ball",
    "canonicalize_core",
    "classify_element",
    "commutator",
    "conjugate",
    "core",
    "escape_witness",
    "is_torsion",
    "lambda12",
    "lambda23",
    "layer_decompose",
    "proj_eq",
    "recognize_form",
    "shape_of",
    "translation",
]

__version__ = "0.1.0"
