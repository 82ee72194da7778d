"""Exact real algebraic number arithmetic."""

from .boxes import ComplexBox
from .embeddings import FieldEmbedding, RootBox, certified_root_boxes, conjugate_embeddings
from .field import (
    FieldElement,
    RealAlgebraicField,
    elem_compare,
    elem_floor,
    field_create,
    isolating_interval_for,
    minimal_polynomial,
)
from .polynomial import RationalPolynomial, is_irreducible
from .rootclass import RootClass, classify_root_pattern, count_unit_circle_roots

__all__ = [
    "ComplexBox",
    "FieldElement",
    "FieldEmbedding",
    "RationalPolynomial",
    "RealAlgebraicField",
    "RootBox",
    "RootClass",
    "certified_root_boxes",
    "classify_root_pattern",
    "conjugate_embeddings",
    "count_unit_circle_roots",
    "elem_compare",
    "elem_floor",
    "field_create",
    "is_irreducible",
    "isolating_interval_for",
    "minimal_polynomial",
]
