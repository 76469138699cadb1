"""Resultants by the Sylvester determinant.

Convention: for ``f`` of degree m and ``g`` of degree n in the elimination
variable, the Sylvester matrix has n shifted copies of f's coefficients
(highest first) in its top rows and m shifted copies of g's below.  Its
determinant satisfies ``Res(f, g) = lc(f)^n * prod g(y_j)`` over the roots
``y_j`` of f, so for monic f the resultant is exactly the product of g over
the roots of f.  The determinant is taken division-free (Berkowitz), so any
commutative coefficient ring works.
"""

from __future__ import annotations

from .matrix import determinant
from .poly import Polynomial, PolynomialRing
from .rings import RingMismatch


def sylvester_rows(fc, gc, zero):
    """Sylvester matrix from coefficient lists given highest degree first."""
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(fc) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(gc) + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: Polynomial, g: Polynomial, var: str, drop: bool = True) -> Polynomial:
    """``Res_var(f, g)`` as a polynomial in the remaining generators.

    >>> from wittkit.exact.rings import ZZ
    >>> from wittkit.exact.parse import parse_polynomial
    >>> f = parse_polynomial("y^2 - x", ZZ, ("x", "y", "z"))
    >>> g = parse_polynomial("z - y^3", ZZ, ("x", "y", "z"))
    >>> str(resultant(f, g, "y"))
    '-x^3 + z^2'
    """
    if f.ring != g.ring or f.gens != g.gens:
        raise RingMismatch("resultant of polynomials from different rings")
    if var not in f.gens:
        raise ValueError(f"{var!r} is not a generator")
    if f.degree(var) < 1 and g.degree(var) < 1:
        raise ValueError("no elimination variable: both inputs are constant in " + var)
    if f.is_zero() or g.is_zero():
        result = f.zero_like()
    else:
        R = PolynomialRing(f.ring, f.gens)
        fc = f.coefficients_in(var)[::-1]
        gc = g.coefficients_in(var)[::-1]
        result = determinant(R, sylvester_rows(fc, gc, R.zero))
    if drop:
        return result.drop(tuple(x for x in f.gens if x != var))
    return result


def univariate_resultant(R, f, g):
    """Resultant of dense univariate coefficient lists (low degree first)."""
    if not f or not g:
        return R.zero
    return determinant(R, sylvester_rows(f[::-1], g[::-1], R.zero))
