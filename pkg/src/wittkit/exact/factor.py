"""Factorisation of monic univariate polynomials.

Over F_p: square-free decomposition, distinct-degree splitting and
Cantor-Zassenhaus equal-degree splitting driven by a seeded generator, so
results never depend on global random state.  Over Q the work is handed to
sympy.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import upoly as U
from .poly import Polynomial
from .rings import PrimeField, RationalField, QQ, is_prime

DEFAULT_SEED = 0x5EED


def _squarefree_mod(f, p):
    """Yield ``(g, k)`` with ``f = prod g**k`` and each ``g`` square-free."""
    out = []
    mult = 1

    def rec(f, mult):
        if len(f) <= 1:
            return
        d = U.deriv_mod(f, p)
        if not d:
            rec(U.compose_pth_root(f, p), mult * p)
            return
        c = U.gcd_mod(f, d, p)
        w = U.divmod_mod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = U.gcd_mod(w, c, p)
            z = U.divmod_mod(w, y, p)[0]
            if len(z) > 1:
                out.append((U.monic_mod(z, p), i * mult))
            i += 1
            w = y
            c = U.divmod_mod(c, y, p)[0]
        if len(c) > 1:
            rec(U.compose_pth_root(c, p), mult * p)

    rec(U.monic_mod(f, p), mult)
    return out


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = U.powmod_mod(h, p, f, p)
        g = U.gcd_mod(f, U.sub_mod(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = U.divmod_mod(f, g, p)[0]
            h = U.rem_mod(h, f, p)
    if len(f) > 1:
        out.append((U.monic_mod(f, p), len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = U.trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, acc = a, a
            for _ in range(d - 1):
                t = U.powmod_mod(t, 2, f, p)
                acc = U.add_mod(acc, t, p)
            b = acc
        else:
            b = U.sub_mod(U.powmod_mod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = U.gcd_mod(f, b, p)
        if 1 < len(g) < len(f):
            rest = U.divmod_mod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(U.monic_mod(rest, p), d, p, rng)


def factor_dense_mod(f, p, seed=DEFAULT_SEED):
    """Factor a monic dense polynomial over F_p into sorted ``(g, k)`` pairs."""
    rng = random.Random(seed)
    f = U.norm_mod(f, p)
    if len(f) < 2:
        raise ValueError("need a polynomial of degree at least 1")
    if f[-1] != 1:
        raise ValueError("polynomial is not monic")
    result = []
    for g, k in _squarefree_mod(f, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree(h, d, p, rng):
                result.append((tuple(irr), k))
    merged = {}
    for g, k in result:
        merged[g] = merged.get(g, 0) + k
    return sorted(((list(g), k) for g, k in merged.items()),
                  key=lambda gk: (len(gk[0]), gk[0][::-1]))


def is_irreducible_dense_mod(f, p):
    """Rabin-style test via distinct-degree splitting."""
    f = U.monic_mod(U.norm_mod(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if len(U.gcd_mod(f, U.deriv_mod(f, p), p)) > 1:
        return False
    parts = _distinct_degree(f, p)
    return len(parts) == 1 and parts[0][1] == n


def factor_monic(f: Polynomial, seed=DEFAULT_SEED):
    """Factor a monic univariate polynomial over F_p or Q.

    Returns a list of ``(monic irreducible factor, multiplicity)`` sorted by
    degree and then coefficients.

    >>> from wittkit.exact.rings import GF
    >>> x = Polynomial.gen(GF(5), ("x",), "x")
    >>> [(str(g), k) for g, k in factor_monic(x**2 + 1)]
    [('x + 2', 1), ('x + 3', 1)]
    """
    R = f.ring
    if f.nvars != 1:
        raise ValueError("factor_monic needs a univariate polynomial")
    if f.degree() < 1:
        raise ValueError("need a polynomial of degree at least 1")
    if not f.is_monic():
        raise ValueError("polynomial is not monic")
    var = f.gens[0]
    if isinstance(R, PrimeField):
        return [(Polynomial.from_dense(R, g, var), k)
                for g, k in factor_dense_mod(f.dense(), R.p, seed)]
    if hasattr(R, "m") and not is_prime(R.m):
        raise ValueError(f"composite modulus {R.m}: not a field")
    if isinstance(R, RationalField):
        return _factor_rational(f)
    raise ValueError(f"factorisation over {R} is not supported")


def _factor_rational(f: Polynomial):
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** k
               for (k,), c in f.terms.items())
    _, factors = sympy.factor_list(expr, x, domain="QQ")
    out = []
    var = f.gens[0]
    for g, k in factors:
        poly = sympy.Poly(g, x, domain="QQ")
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        out.append((Polynomial.from_dense(QQ, coeffs, var).monic(), k))
    return sorted(out, key=lambda gk: (gk[0].degree(), sorted(gk[0].terms.items(), reverse=True)))


def is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over F_p or Q of a univariate polynomial."""
    R = f.ring
    if f.degree() < 1:
        return False
    if isinstance(R, PrimeField):
        return is_irreducible_dense_mod(f.dense(), R.p)
    if isinstance(R, RationalField):
        facs = _factor_rational(f.monic())
        return len(facs) == 1 and facs[0][1] == 1
    raise ValueError(f"irreducibility over {R} is not supported")


def is_irreducible_by_search(f: Polynomial) -> bool:
    """Exhaustive divisor search over F_p (small degree oracle)."""
    from itertools import product

    R = f.ring
    p = R.p
    n = f.degree()
    dense = f.monic().dense()
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not U.rem_mod(dense, g, p):
                return False
    return True
