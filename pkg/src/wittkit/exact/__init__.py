"""Exact arithmetic: rings, polynomials, series, matrices, resultants."""

from .rings import (GF, QQ, ZZ, NotInvertible, Ring, RingMismatch, Zmod,
                    ZZ_local, is_prime, prime_power)
from .poly import DEGREE_OF_ZERO, Polynomial, PolynomialRing
from .series import TruncatedSeries, TruncatedSeriesRing, series_invert
from .matrix import (ExactMatrix, HowellCertificate, SparseHowellBasis,
                     berkowitz, determinant, howell_form, is_member,
                     reduce_vector)
from .resultant import resultant
from .factor import factor_monic, is_irreducible
from .algebra import (FiniteFreeAlgebra, MonogenicAlgebra, ProductAlgebra,
                      monogenic_algebra, mult_char_poly, product_algebra)
from .parse import ParseError, parse_element, parse_polynomial, parse_ring

__all__ = [
    "GF", "QQ", "ZZ", "NotInvertible", "Ring", "RingMismatch", "Zmod", "ZZ_local",
    "is_prime", "prime_power", "DEGREE_OF_ZERO", "Polynomial", "PolynomialRing",
    "TruncatedSeries", "TruncatedSeriesRing", "series_invert", "ExactMatrix",
    "HowellCertificate", "SparseHowellBasis", "berkowitz", "determinant",
    "howell_form", "is_member", "reduce_vector", "resultant", "factor_monic",
    "is_irreducible", "FiniteFreeAlgebra", "MonogenicAlgebra", "ProductAlgebra",
    "monogenic_algebra", "mult_char_poly", "product_algebra", "ParseError",
    "parse_element", "parse_polynomial", "parse_ring",
]
