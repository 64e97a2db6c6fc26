"""Exact construction and certification of Anosov automorphisms of nilpotent Lie algebras."""

from .algebra import (
    LieAlgebra,
    bracket,
    change_of_basis,
    direct_sum,
    grading_check,
    has_abelian_factor,
    jacobi_check,
    lower_central_series,
    nilpotency_step,
    scale_basis_to_integer,
)
from .doubling import DoublingResult, double_construction, quadext_conjugation_check, verify_automorphism
from .hyperbolicity import AnosovCertificate, certify, char_poly, classify_splitting, unit_circle_root_test
from .polynomial import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "AnosovCertificate",
    "DoublingResult",
    "IntPolynomial",
    "LieAlgebra",
    "bracket",
    "certify",
    "change_of_basis",
    "char_poly",
    "classify_splitting",
    "direct_sum",
    "double_construction",
    "grading_check",
    "has_abelian_factor",
    "jacobi_check",
    "lower_central_series",
    "nilpotency_step",
    "quadext_conjugation_check",
    "scale_basis_to_integer",
    "unit_circle_root_test",
    "verify_automorphism",
]
