"""p-typical Witt vectors as a quotient of big Witt vectors.

``W_n`` is the quotient of the big Witt vectors of length ``p^(n-1)`` over a
Z_(p)-algebra by the images of the idempotents ``l^-1 V_l F_l`` for primes
``l != p``.  Classes are represented by canonical component tuples
``(x_0, ..., x_{n-1})``: the class of a big vector ``u`` has ghost
components ``w_i = g_{p^i}(u)``, and the components are solved from
``w_i = sum_j p^j x_j^(p^(i-j))``.  That ghost formula is not assumed: it is
recomputed from the big ghost of the lift ``prod_j (1 - x_j t^(p^j))`` when
the universal tables are built, and checked.

All structure polynomials (sum, negative, star, Frobenius, projection) are
derived symbolically over Q through these ghost equations; their
coefficients are asserted to be p-integral (in fact they are integers).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from ..exact.poly import Polynomial
from ..exact.rings import QQ, Ring, RingMismatch, NotInvertible, is_prime
from .big import (BigWittVector, HatWittVector, vf_descend, witt_add,
                  verschiebung as big_verschiebung)
from .universal import CompiledPolynomials, symbolic_ghost

_lock = threading.Lock()


class PIntegralityError(AssertionError):
    """A derived polynomial has a denominator divisible by p."""


def _check_p_integral(f: Polynomial, p: int, what: str) -> Polynomial:
    from ..exact.rings import ZZ
    out = {}
    for e, c in f.terms.items():
        c = Fraction(c)
        if c.denominator % p == 0:
            raise PIntegralityError(f"{what}: coefficient {c} is not p-integral")
        if c.denominator != 1:
            raise PIntegralityError(f"{what}: coefficient {c} is p-integral but not integral")
        out[e] = int(c)
    return Polynomial(ZZ, f.gens, out)


def ghost_polynomials(xs, p):
    """``w_i = sum_{j<=i} p^j x_j^(p^(i-j))`` for symbolic components."""
    return [sum((xs[j] ** (p ** (i - j))) * (p ** j) for j in range(i + 1))
            for i in range(len(xs))]


def solve_components(targets, p, gens, what):
    """Solve ``w_i(x) = targets[i]`` for ``x`` over Q; assert p-integrality."""
    xs = []
    for i, target in enumerate(targets):
        acc = target
        for j, x in enumerate(xs):
            acc = acc - (x ** (p ** (i - j))) * (p ** j)
        xs.append(acc.scale(Fraction(1, p ** i)))
    return [_check_p_integral(x, p, f"{what} component {i}") for i, x in enumerate(xs)]


def lift_series(xs, p, ring_one, length):
    """Series coefficients of ``prod_j (1 - x_j t^(p^j))`` up to ``t^length``."""
    series = [ring_one] + [ring_one * 0] * length
    for j, x in enumerate(xs):
        step = p ** j
        if step > length:
            break
        for i in range(length, step - 1, -1):
            series[i] = series[i] - x * series[i - step]
    return series


class PTypicalTables:
    """Universal polynomials for fixed ``(p, n)``; immutable once built."""

    def __init__(self, p: int, n: int):
        self.p, self.n = p, n
        xn = tuple(f"x{i}" for i in range(n))
        yn = tuple(f"y{i}" for i in range(n))
        gens = xn + yn
        X = [Polynomial.gen(QQ, gens, v) for v in xn]
        Y = [Polynomial.gen(QQ, gens, v) for v in yn]

        # ghost formula recovered from the big ghost of the lift
        length = p ** (n - 1)
        lifted = lift_series(X, p, Polynomial.constant(QQ, gens, 1), length)
        big_g = symbolic_ghost(lifted[1:])
        wx = [big_g[p ** i - 1] for i in range(n)]
        if wx != ghost_polynomials(X, p):
            raise AssertionError("p-typical ghost formula does not match the big ghost")
        wy = [f.subs({a: b for a, b in zip(xn, Y)}) for f in wx]
        self.ghost_formula_checked = True

        self.sum = CompiledPolynomials(
            solve_components([a + b for a, b in zip(wx, wy)], p, gens, "sum"), gens)
        self.star = CompiledPolynomials(
            solve_components([a * b for a, b in zip(wx, wy)], p, gens, "star"), gens)
        self.neg = CompiledPolynomials(
            [f.drop(xn) for f in solve_components([-a for a in wx], p, gens, "negative")], xn)
        # Frobenius W_{n} -> W_{n-1}: w_i(Fx) = w_{i+1}(x)
        if n >= 2:
            self.frobenius = CompiledPolynomials(
                [f.drop(xn) for f in solve_components(wx[1:], p, gens, "Frobenius")], xn)
        else:
            self.frobenius = None

    @property
    def term_counts(self):
        return {"sum": self.sum.term_counts, "star": self.star.term_counts}


@lru_cache(maxsize=None)
def _tables(p, n):
    return PTypicalTables(p, n)


def tables(p: int, n: int) -> PTypicalTables:
    with _lock:
        return _tables(p, n)


@lru_cache(maxsize=None)
def _projection(p, n):
    length = p ** (n - 1)
    names = tuple(f"a{i}" for i in range(1, length + 1))
    a = [Polynomial.gen(QQ, names, v) for v in names]
    g = symbolic_ghost(a)
    comps = solve_components([g[p ** i - 1] for i in range(n)], p, names, "projection")
    return CompiledPolynomials(comps, names)


def projection_table(p: int, n: int) -> CompiledPolynomials:
    with _lock:
        return _projection(p, n)


class PTypicalWitt:
    """Element of ``W_n`` over ``ring`` with components ``x_0..x_{n-1}``."""

    __slots__ = ("ring", "p", "components")

    def __init__(self, ring: Ring, p: int, components):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.ring = ring
        self.p = p
        self.components = tuple(ring.convert(c) for c in components)

    @property
    def n(self):
        return len(self.components)

    @classmethod
    def zero(cls, ring, p, n):
        return cls(ring, p, (ring.zero,) * n)

    @classmethod
    def teichmuller(cls, ring, p, a, n):
        return cls(ring, p, (ring.convert(a),) + (ring.zero,) * (n - 1))

    @classmethod
    def unit(cls, ring, p, n):
        return cls.teichmuller(ring, p, ring.one, n)

    def _check(self, other):
        if not isinstance(other, PTypicalWitt):
            raise TypeError("expected a PTypicalWitt")
        if other.ring != self.ring:
            raise RingMismatch(f"p-typical vectors over {self.ring} and {other.ring}")
        if other.p != self.p or other.n != self.n:
            raise ValueError(f"level mismatch: (p={self.p}, n={self.n}) vs (p={other.p}, n={other.n})")

    def __eq__(self, other):
        if not isinstance(other, PTypicalWitt):
            return NotImplemented
        R = self.ring
        return (R == other.ring and self.p == other.p and self.n == other.n
                and all(R.eq(a, b) for a, b in zip(self.components, other.components)))

    def __hash__(self):
        return hash((self.ring, self.p, self.components))

    def __add__(self, other):
        return ptypical_add(self, other)

    def __neg__(self):
        return ptypical_neg(self)

    def __sub__(self, other):
        return ptypical_add(self, ptypical_neg(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return ptypical_mul_int(self, other)
        return ptypical_star(self, other)

    __rmul__ = __mul__

    def ghost(self):
        """Ghost components ``w_i = sum_j p^j x_j^(p^(i-j))`` (any ring)."""
        R, p = self.ring, self.p
        out = []
        for i in range(self.n):
            acc = R.zero
            for j in range(i + 1):
                acc = R.add(acc, R.mul_int(R.pow(self.components[j], p ** (i - j)), p ** j))
            out.append(acc)
        return tuple(out)

    def lift(self) -> BigWittVector:
        """A big Witt vector of length ``p^(n-1)`` in this class."""
        R = self.ring
        series = lift_series_raw(R, self.components, self.p, self.p ** (self.n - 1))
        return BigWittVector(R, series[1:])

    def truncate(self, m):
        return PTypicalWitt(self.ring, self.p, self.components[:m])

    def __repr__(self):
        R = self.ring
        return f"PTypicalWitt(p={self.p}, {R}, ({', '.join(R.format(c) for c in self.components)}))"

    def to_json(self):
        return {"ring": self.ring.tag, "p": self.p, "n": self.n,
                "components": [self.ring.format(c) for c in self.components]}

    @classmethod
    def from_json(cls, data, ring=None):
        from ..exact.parse import parse_ring
        R = ring or parse_ring(data["ring"])
        comps = [R.parse(str(c)) for c in data["components"]]
        if "n" in data and len(comps) != int(data["n"]):
            raise ValueError("component count does not match n")
        return cls(R, int(data["p"]), comps)


def lift_series_raw(R, xs, p, length):
    series = [R.one] + [R.zero] * length
    for j, x in enumerate(xs):
        step = p ** j
        if step > length:
            break
        if R.is_zero(x):
            continue
        for i in range(length, step - 1, -1):
            series[i] = R.sub(series[i], R.mul(x, series[i - step]))
    return series


def ptypical_add(x: PTypicalWitt, y: PTypicalWitt) -> PTypicalWitt:
    x._check(y)
    T = tables(x.p, x.n)
    return PTypicalWitt(x.ring, x.p, T.sum.evaluate(x.ring, x.components + y.components))


def ptypical_neg(x: PTypicalWitt) -> PTypicalWitt:
    T = tables(x.p, x.n)
    return PTypicalWitt(x.ring, x.p, T.neg.evaluate(x.ring, x.components))


def ptypical_mul_int(x: PTypicalWitt, k: int) -> PTypicalWitt:
    if k < 0:
        return ptypical_mul_int(ptypical_neg(x), -k)
    result = PTypicalWitt.zero(x.ring, x.p, x.n)
    base = x
    while k:
        if k & 1:
            result = ptypical_add(result, base)
        k >>= 1
        if k:
            base = ptypical_add(base, base)
    return result


def ptypical_star(x: PTypicalWitt, y: PTypicalWitt) -> PTypicalWitt:
    x._check(y)
    T = tables(x.p, x.n)
    return PTypicalWitt(x.ring, x.p, T.star.evaluate(x.ring, x.components + y.components))


def ptypical_unit(ring, p, n) -> PTypicalWitt:
    return PTypicalWitt.unit(ring, p, n)


def ptypical_F(x: PTypicalWitt) -> PTypicalWitt:
    """``F: W_{n+1} -> W_n``."""
    if x.n < 2:
        raise ValueError("F needs level at least 2")
    T = tables(x.p, x.n)
    return PTypicalWitt(x.ring, x.p, T.frobenius.evaluate(x.ring, x.components))


def ptypical_V(x: PTypicalWitt) -> PTypicalWitt:
    """``V: W_n -> W_{n+1}``, shifting components."""
    return PTypicalWitt(x.ring, x.p, (x.ring.zero,) + x.components)


# --- the quotient construction -------------------------------------------------------

def _require_invertible(ring, ell):
    if not ring.is_unit(ring.from_int(ell)):
        raise NotInvertible(f"{ell} is not invertible in {ring}")


def series_root(R: Ring, series, ell: int):
    """The unique ``y`` with ``y(0) = 1`` and ``y^ell = series`` (ell a unit)."""
    from ..exact.series import series_mul

    _require_invertible(R, ell)
    n = len(series) - 1
    y = [R.one] + [R.zero] * n
    for k in range(1, n + 1):
        power = [R.one] + [R.zero] * n
        for _ in range(ell):
            power = series_mul(R, power, y, order=n)
        # coefficient k of y^ell is ell*y_k + (terms in lower y's); y_k is still 0
        y[k] = R.divide_int(R.sub(series[k], power[k]), ell)
    return y


def idempotent_apply(ell: int, u: BigWittVector) -> BigWittVector:
    """``ell^-1 V_ell F_ell (u)`` on big Witt vectors over a ring where ell is a unit."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    R = u.ring
    _require_invertible(R, ell)
    w = vf_descend(ell, u.n, u)
    return BigWittVector(R, series_root(R, w.series(), ell)[1:])


def project_ptypical(u, p: int) -> PTypicalWitt:
    """Class of a big (or hat) Witt vector of length ``p^(n-1)`` in ``W_n``.

    Unit and degree components of a hat vector lie in the images of the
    idempotents and are ignored.
    """
    if isinstance(u, HatWittVector):
        u = u.witt
    length = u.n
    n = 1
    while p ** (n - 1) < length:
        n += 1
    if p ** (n - 1) != length:
        raise ValueError(f"length {length} is not a power of {p}")
    table = projection_table(p, n)
    return PTypicalWitt(u.ring, p, table.evaluate(u.ring, u.coeffs))


def big_verschiebung_class(x: PTypicalWitt) -> PTypicalWitt:
    """V computed through the big Witt vectors: project(V_p(lift x))."""
    u = x.lift()
    return project_ptypical(big_verschiebung(x.p, u, length=x.p ** x.n), x.p)


def big_frobenius_class(x: PTypicalWitt) -> PTypicalWitt:
    from .big import frobenius_truncating
    u = x.lift()
    return project_ptypical(frobenius_truncating(x.p, u, x.p ** (x.n - 2)), x.p)


def big_star_class(x: PTypicalWitt, y: PTypicalWitt) -> PTypicalWitt:
    from .big import witt_star
    return project_ptypical(witt_star(x.lift(), y.lift()), x.p)


def big_add_class(x: PTypicalWitt, y: PTypicalWitt) -> PTypicalWitt:
    return project_ptypical(witt_add(x.lift(), y.lift()), x.p)
