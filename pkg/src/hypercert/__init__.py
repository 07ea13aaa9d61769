"""Exact algebra for certifying that 2n+2 hyperplanes in P^n are generic."""

from .errors import InputError, LemmaViolation, SizeLimitError, VerificationError
from .scalar import ExactScalar, as_scalar, format_scalar, parse_scalar, root_of_unity
from .laurent import LaurentPoly, MonomialUnit, borel_check, det_laurent, det_poly_in_g, substitute_monomials
from .lattice import Classification, Kind, classify, collapse_conclusion, has_property, same_subgroup, tuple_rank
from .geometry import HyperplaneFamily, general_position, normalize_block
from .engine import (
    FujimotoShape, GenericityCertificate, Verdict, build_P1, build_P2, fujimoto_determinant,
    genericity_check, lemma41_forward_check, pairing_identity_check, reduce_block_determinant,
    shared_determinant,
)

__all__ = [
    "InputError", "LemmaViolation", "SizeLimitError", "VerificationError",
    "ExactScalar", "as_scalar", "format_scalar", "parse_scalar", "root_of_unity",
    "LaurentPoly", "MonomialUnit", "borel_check", "det_laurent", "det_poly_in_g", "substitute_monomials",
    "Classification", "Kind", "classify", "collapse_conclusion", "has_property", "same_subgroup", "tuple_rank",
    "HyperplaneFamily", "general_position", "normalize_block",
    "FujimotoShape", "GenericityCertificate", "Verdict", "build_P1", "build_P2", "fujimoto_determinant",
    "genericity_check", "lemma41_forward_check", "pairing_identity_check", "reduce_block_determinant",
    "shared_determinant",
]
