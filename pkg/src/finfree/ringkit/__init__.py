"""Exact arithmetic kernel: domains, sparse multivariate and dense univariate
polynomials, resultants, and division-free matrix algebra."""

from .domains import ZZ, QQ, GF, CoefficientDomain, ExtensionField, IntegerDomain, PrimeField, RationalDomain
from .multipoly import MultiPoly
from .unipoly import UniPoly, factor_gf, field_embedding, is_irreducible_gf, minimal_polynomial, roots_gf
from .xpoly import XPoly, discriminant_in_x, resultant
from .linalg import (
    PolyMatrix,
    cofactor_det,
    det_field,
    in_span_field,
    kernel_basis_field,
    rank_field,
    rref_field,
    solve_field,
)

__all__ = [
    "ZZ", "QQ", "GF", "CoefficientDomain", "ExtensionField", "IntegerDomain",
    "PrimeField", "RationalDomain", "MultiPoly", "UniPoly", "factor_gf",
    "field_embedding", "is_irreducible_gf", "minimal_polynomial", "roots_gf",
    "XPoly", "discriminant_in_x", "resultant", "PolyMatrix", "cofactor_det",
    "det_field", "in_span_field", "kernel_basis_field", "rank_field",
    "rref_field", "solve_field",
]
