"""Power series truncated modulo t^(N+1)."""

from __future__ import annotations

from .rings import Ring, RingMismatch, NotInvertible


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N`` with raw coefficients in ``ring``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs, order=None):
        coeffs = [ring.convert(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [ring.zero] * (order + 1))[:order + 1]
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.ring != self.ring or other.order != self.order:
            raise RingMismatch("series with different rings or orders")
        return other

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other):
        other = self._check(other)
        R = self.ring
        return TruncatedSeries(R, [R.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._check(other)
        R = self.ring
        return TruncatedSeries(R, [R.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        R = self.ring
        return TruncatedSeries(R, [R.neg(a) for a in self.coeffs])

    def __mul__(self, other):
        other = self._check(other)
        return TruncatedSeries(self.ring, series_mul(self.ring, self.coeffs, other.coeffs))

    def inverse(self):
        return series_invert(self)

    def __repr__(self):
        R = self.ring
        return f"TruncatedSeries({R}, [{', '.join(R.format(c) for c in self.coeffs)}])"


def series_mul(R: Ring, a, b, order=None):
    """Product of coefficient sequences truncated to ``order``."""
    n = (len(a) - 1) if order is None else order
    out = [R.zero] * (n + 1)
    add, mul, is_zero = R.add, R.mul, R.is_zero
    for i, x in enumerate(a[:n + 1]):
        if is_zero(x):
            continue
        for j in range(min(len(b), n + 1 - i)):
            y = b[j]
            if not is_zero(y):
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def series_inverse_coeffs(R: Ring, a, order=None):
    n = (len(a) - 1) if order is None else order
    if not R.is_unit(a[0]):
        raise NotInvertible("constant term is not a unit")
    inv0 = R.inv(a[0])
    out = [inv0] + [R.zero] * n
    for k in range(1, n + 1):
        acc = R.zero
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = R.add(acc, R.mul(a[i], out[k - i]))
        out[k] = R.neg(R.mul(acc, inv0))
    return out


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a unit.

    >>> from wittkit.exact.rings import ZZ
    >>> series_invert(TruncatedSeries(ZZ, [1, 2, 0])).coeffs
    (1, -2, 4)
    """
    return TruncatedSeries(s.ring, series_inverse_coeffs(s.ring, s.coeffs))


class TruncatedSeriesRing(Ring):
    """``A[t]/(t^(N+1))`` as a ring whose values are coefficient tuples."""

    def __init__(self, base: Ring, order: int):
        self.base = base
        self.order = order
        self.tag = f"{base.tag}[t]/(t^{order + 1})"
        self.zero = (base.zero,) * (order + 1)
        self.one = (base.one,) + (base.zero,) * order
        self.characteristic = base.characteristic
        self.has_rationals = base.has_rationals

    def key(self):
        return ("TruncatedSeriesRing", self.base.key(), self.order)

    def from_int(self, k):
        return (self.base.from_int(k),) + (self.base.zero,) * self.order

    def from_fraction(self, q):
        return (self.base.from_fraction(q),) + (self.base.zero,) * self.order

    def convert(self, value):
        if isinstance(value, tuple):
            return value
        return (self.base.convert(value),) + (self.base.zero,) * self.order

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        return tuple(series_mul(self.base, a, b))

    def mul_int(self, a, k):
        return tuple(self.base.mul_int(x, k) for x in a)

    def eq(self, a, b):
        B = self.base
        return all(B.eq(x, y) for x, y in zip(a, b))

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def is_unit(self, a):
        return self.base.is_unit(a[0])

    def inv(self, a):
        return tuple(series_inverse_coeffs(self.base, a))

    def format(self, a):
        return "[" + ", ".join(self.base.format(x) for x in a) + "]"

    def random(self, rng, size=None):
        return tuple(self.base.random(rng) for _ in range(self.order + 1))
