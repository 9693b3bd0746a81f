"""Exact arithmetic kernel: rationals, sparse polynomials, resultants."""

from .poly import (
    MPoly,
    RatFunc,
    check_varname,
    divides,
    exact_divide,
    format_sparse_poly,
    mpoly_gcd,
    parse_sparse_poly,
    substitute,
)
from .resultants import (
    discriminant,
    reciprocal_decompose,
    reduce_chain,
    reduce_wrt,
    resultant,
    resultant_prs,
    resultant_sylvester,
    sylvester_matrix,
)
from .modres import is_prime, prime_stream, resultant_fp, resultant_modular
from .exprs import mpoly, parse_expr, ratfunc
from .fieldpoly import FieldPoly

__all__ = [
    "MPoly", "RatFunc", "FieldPoly",
    "check_varname", "divides", "exact_divide", "mpoly_gcd", "substitute",
    "format_sparse_poly", "parse_sparse_poly",
    "resultant", "resultant_prs", "resultant_sylvester", "resultant_modular",
    "sylvester_matrix", "discriminant", "reduce_wrt", "reduce_chain",
    "reciprocal_decompose", "resultant_fp", "is_prime", "prime_stream",
    "mpoly", "parse_expr", "ratfunc",
]
