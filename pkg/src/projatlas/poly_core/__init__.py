"""Exact polynomial algebra: arithmetic, parsing, elimination and real roots."""

from .elimination import gcd_bivariate, resultant_eliminate
from .parser import parse_polynomial, tokenize
from .poly1 import Poly1, poly1_gcd, square_free_decomposition, square_free_part
from .poly2 import Poly2, evaluate, exact_divide, format_poly, from_univariate, poly_arith
from .roots import DEFAULT_ROOT_TOL, RealRoot, real_roots_univariate

__all__ = [
    "DEFAULT_ROOT_TOL",
    "Poly1",
    "Poly2",
    "RealRoot",
    "evaluate",
    "exact_divide",
    "format_poly",
    "from_univariate",
    "gcd_bivariate",
    "parse_polynomial",
    "poly1_gcd",
    "poly_arith",
    "real_roots_univariate",
    "resultant_eliminate",
    "square_free_decomposition",
    "square_free_part",
    "tokenize",
]
