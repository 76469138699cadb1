"""Big Witt vectors of finite length.

``W_n(A)`` is the group ``1 + tA[t]/(t^(n+1))`` under multiplication of
series; a vector of length n is stored as the coefficient tuple
``(a_1, ..., a_n)``.  The Teichmüller lift is ``[a] = 1 - a t`` and the ghost
components are the coefficients of ``-t d/dt log u(t)``, so that
``ghost([a]) = (a, a^2, ..., a^n)``.

Star products and Frobenius maps are evaluated either through universal
integer polynomials (``engine="table"``) or through Witt coordinates
``u = prod_k (1 - c_k t^k)`` (``engine="coordinates"``), using

* ``F_s(1 - c t^k) = (1 - c^(s/g) t^(k/g))^g`` with ``g = gcd(s, k)``,
* ``(1 - a t^i) * (1 - b t^j) = (1 - a^(j/g) b^(i/g) t^(ij/g))^g`` for star.

``engine="auto"`` uses tables inside their size range and coordinates
beyond it.
"""

from __future__ import annotations

from math import gcd

from ..exact.rings import Ring, RingMismatch, NotInvertible
from ..exact.series import series_inverse_coeffs, series_mul
from . import universal

ENGINES = ("auto", "table", "coordinates")


class BigWittVector:
    """``1 + a_1 t + ... + a_n t^n`` over ``ring``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(ring.convert(c) for c in coeffs)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, (ring.zero,) * n)

    @classmethod
    def teichmuller(cls, ring, a, n):
        a = ring.convert(a)
        return cls(ring, (ring.neg(a),) + (ring.zero,) * (n - 1)) if n else cls(ring, ())

    @classmethod
    def from_series(cls, ring, series):
        """From full series coefficients ``(1, a_1, ..., a_n)``."""
        if not ring.is_one(series[0]):
            raise ValueError("series must have constant term 1")
        return cls(ring, series[1:])

    @property
    def n(self):
        return len(self.coeffs)

    def series(self):
        return (self.ring.one,) + self.coeffs

    def _check(self, other):
        if not isinstance(other, BigWittVector):
            raise TypeError("expected a BigWittVector")
        if other.ring != self.ring:
            raise RingMismatch(f"Witt vectors over {self.ring} and {other.ring}")
        if other.n != self.n:
            raise ValueError(f"Witt vectors of lengths {self.n} and {other.n}")

    def __eq__(self, other):
        if not isinstance(other, BigWittVector):
            return NotImplemented
        R = self.ring
        return (R == other.ring and self.n == other.n
                and all(R.eq(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other):
        return witt_add(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return witt_mul_int(self, other)
        return witt_star(self, other)

    __rmul__ = __mul__

    def is_identity(self):
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def truncate(self, m):
        if m > self.n:
            raise ValueError(f"cannot truncate length {self.n} to {m}")
        return BigWittVector(self.ring, self.coeffs[:m])

    def pad(self, m):
        """Same series viewed at a larger length (higher coefficients zero)."""
        return BigWittVector(self.ring, self.coeffs + (self.ring.zero,) * (m - self.n))

    def __str__(self):
        R = self.ring
        parts = ["1"]
        for k, c in enumerate(self.coeffs, start=1):
            if R.is_zero(c):
                continue
            mono = "t" if k == 1 else f"t^{k}"
            neg = R.is_negative(c)
            mag = R.neg(c) if neg else c
            text = R.format(mag)
            body = mono if R.is_one(mag) else f"{text}*{mono}" if " " not in text else f"({text})*{mono}"
            parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BigWittVector({self.ring}, n={self.n}, {self})"

    def to_json(self):
        return {"ring": self.ring.tag, "n": self.n,
                "coeffs": [self.ring.format(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, ring=None):
        from ..exact.parse import parse_ring
        R = ring or parse_ring(data["ring"])
        coeffs = [R.parse(str(c)) for c in data["coeffs"]]
        if len(coeffs) != int(data["n"]):
            raise ValueError("coefficient count does not match n")
        return cls(R, coeffs)


# --- group structure ------------------------------------------------------------

def witt_add(u: BigWittVector, v: BigWittVector) -> BigWittVector:
    """Group law: product of series truncated at ``t^(n+1)``."""
    u._check(v)
    prod = series_mul(u.ring, u.series(), v.series())
    return BigWittVector(u.ring, prod[1:])


def witt_neg(u: BigWittVector) -> BigWittVector:
    return BigWittVector(u.ring, series_inverse_coeffs(u.ring, u.series())[1:])


def witt_mul_int(u: BigWittVector, k: int) -> BigWittVector:
    """``k``-fold group sum (series power)."""
    if k < 0:
        return witt_mul_int(witt_neg(u), -k)
    result = BigWittVector.identity(u.ring, u.n)
    base = u
    while k:
        if k & 1:
            result = witt_add(result, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return result


def teichmuller(a, n, ring: Ring) -> BigWittVector:
    return BigWittVector.teichmuller(ring, a, n)


def witt_sum(vectors, ring, n):
    acc = BigWittVector.identity(ring, n)
    for v in vectors:
        acc = witt_add(acc, v)
    return acc


# --- ghost coordinates -------------------------------------------------------------

class GhostVector:
    """Ghost components ``g_1..g_n``; addition and product are componentwise."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        self.ring = ring
        self.entries = tuple(entries)

    @property
    def n(self):
        return len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, GhostVector) and self.ring == other.ring
                and len(self.entries) == len(other.entries)
                and all(self.ring.eq(x, y) for x, y in zip(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __add__(self, other):
        R = self.ring
        return GhostVector(R, [R.add(x, y) for x, y in zip(self.entries, other.entries)])

    def __mul__(self, other):
        R = self.ring
        return GhostVector(R, [R.mul(x, y) for x, y in zip(self.entries, other.entries)])

    def __repr__(self):
        return f"GhostVector({self.ring}, [{', '.join(self.ring.format(x) for x in self.entries)}])"


def ghost(u: BigWittVector) -> GhostVector:
    """Coefficients of ``-t u'(t)/u(t)``; division-free, so valid over any ring.

    >>> from wittkit.exact.rings import ZZ
    >>> ghost(BigWittVector.teichmuller(ZZ, 3, 4)).entries
    (3, 9, 27, 81)
    """
    R = u.ring
    a = u.coeffs
    g = []
    for k in range(1, u.n + 1):
        acc = R.mul_int(a[k - 1], -k)
        for i in range(1, k):
            acc = R.sub(acc, R.mul(g[i - 1], a[k - i - 1]))
        g.append(acc)
    return GhostVector(R, g)


def unghost(g: GhostVector) -> BigWittVector:
    """Inverse of :func:`ghost`; needs ``1..n`` invertible in the ring."""
    R = g.ring
    a = []
    for k in range(1, g.n + 1):
        acc = g.entries[k - 1]
        for i in range(1, k):
            acc = R.add(acc, R.mul(g.entries[i - 1], a[k - i - 1]))
        if not R.is_unit(R.from_int(k)):
            raise NotInvertible(f"unghost needs {k} to be invertible in {R}")
        a.append(R.neg(R.divide_int(acc, k)))
    return BigWittVector(R, a)


# --- Witt coordinates ----------------------------------------------------------------

def witt_coordinates(u: BigWittVector):
    """``(c_1, ..., c_n)`` with ``u = prod_k (1 - c_k t^k)`` mod ``t^(n+1)``."""
    R = u.ring
    cur = list(u.series())
    n = u.n
    out = []
    for k in range(1, n + 1):
        c = R.neg(cur[k])
        out.append(c)
        if R.is_zero(c):
            continue
        # divide by (1 - c t^k): multiply by sum_j c^j t^(jk)
        for i in range(k, n + 1):
            cur[i] = R.add(cur[i], R.mul(c, cur[i - k]))
    return out


def from_witt_coordinates(ring: Ring, coords, n=None) -> BigWittVector:
    n = len(coords) if n is None else n
    series = [ring.one] + [ring.zero] * n
    for k, c in enumerate(coords, start=1):
        if k > n or ring.is_zero(c):
            continue
        for i in range(n, k - 1, -1):
            series[i] = ring.sub(series[i], ring.mul(c, series[i - k]))
    return BigWittVector(ring, series[1:])


def _power_factor(ring, series, c, step, mult, n):
    """Multiply ``series`` in place by ``(1 - c t^step)^mult`` mod ``t^(n+1)``."""
    for _ in range(mult):
        for i in range(n, step - 1, -1):
            series[i] = ring.sub(series[i], ring.mul(c, series[i - step]))


# --- star product ----------------------------------------------------------------------

def _resolve_engine(engine, in_table_range):
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    if engine == "auto":
        return "table" if in_table_range else "coordinates"
    if engine == "table" and not in_table_range:
        raise ValueError("size outside the universal table range")
    return engine


def witt_star(u: BigWittVector, v: BigWittVector, engine="auto") -> BigWittVector:
    """Ring product characterised by ``[a] * [b] = [ab]``.

    >>> from wittkit.exact.rings import ZZ
    >>> witt_star(BigWittVector(ZZ, [1, 0]), BigWittVector(ZZ, [1, 0])).coeffs
    (-1, 0)
    """
    u._check(v)
    R, n = u.ring, u.n
    if n == 0:
        return u
    engine = _resolve_engine(engine, n <= universal.STAR_TABLE_MAX_N)
    if engine == "table":
        table = universal.star_table(n)
        return BigWittVector(R, table.evaluate(R, u.coeffs + v.coeffs))
    cu, cv = witt_coordinates(u), witt_coordinates(v)
    series = [R.one] + [R.zero] * n
    for i, a in enumerate(cu, start=1):
        if R.is_zero(a):
            continue
        for j, b in enumerate(cv, start=1):
            g = gcd(i, j)
            step = i * j // g
            if step > n or R.is_zero(b):
                continue
            c = R.mul(R.pow(a, j // g), R.pow(b, i // g))
            _power_factor(R, series, c, step, g, n)
    return BigWittVector(R, series[1:])


def unit(ring: Ring, n: int) -> BigWittVector:
    """The multiplicative unit ``[1]``."""
    return BigWittVector.teichmuller(ring, ring.one, n)


# --- Frobenius and Verschiebung --------------------------------------------------------

def frobenius(s: int, u: BigWittVector, engine="auto") -> BigWittVector:
    """``F_s: W_{sn} -> W_n``; the input length must be a multiple of ``s``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    if u.n % s:
        raise ValueError(f"length {u.n} is not a multiple of s={s}; use frobenius_truncating")
    n = u.n // s
    R = u.ring
    if s == 1:
        return u
    if n == 0:
        return BigWittVector(R, ())
    engine = _resolve_engine(engine, s <= universal.FROBENIUS_TABLE_MAX_S
                             and n <= universal.FROBENIUS_TABLE_MAX_N)
    if engine == "table":
        return BigWittVector(R, universal.frobenius_table(s, n).evaluate(R, u.coeffs))
    series = [R.one] + [R.zero] * n
    for k, c in enumerate(witt_coordinates(u), start=1):
        if R.is_zero(c):
            continue
        g = gcd(s, k)
        step = k // g
        if step > n:
            continue
        _power_factor(R, series, R.pow(c, s // g), step, g, n)
    return BigWittVector(R, series[1:])


def frobenius_truncating(s: int, u: BigWittVector, n: int, engine="auto") -> BigWittVector:
    """``F_s`` after truncating ``u`` to length ``s*n``."""
    if u.n < s * n:
        raise ValueError(f"length {u.n} is smaller than s*n = {s * n}")
    return frobenius(s, u.truncate(s * n), engine)


def verschiebung(s: int, u: BigWittVector, length=None) -> BigWittVector:
    """``V_s``: substitute ``t -> t^s``; lands in length ``s*n`` by default."""
    if s < 1:
        raise ValueError("s must be at least 1")
    R = u.ring
    m = s * u.n if length is None else length
    if m > s * (u.n + 1) - 1:
        raise ValueError(f"V_{s} from length {u.n} does not lift to length {m}")
    out = [R.zero] * m
    for k, c in enumerate(u.coeffs, start=1):
        if s * k <= m:
            out[s * k - 1] = c
    return BigWittVector(R, out)


def vf_descend(s: int, m: int, u: BigWittVector, engine="auto") -> BigWittVector:
    """``V_s F_s`` descended to ``W_m -> W_m``.

    Truncate to ``s*floor(m/s)``, apply ``F_s``, then ``V_s`` lifted to
    length ``m`` (possible since ``s*(floor(m/s) + 1) >= m + 1``).
    """
    if u.n != m:
        raise ValueError(f"expected a vector of length m={m}")
    if m < 0:
        raise ValueError("m must be non-negative")
    q = m // s
    return verschiebung(s, frobenius(s, u.truncate(s * q), engine), length=m)


# --- the extension W^ = W + G_m + Z ---------------------------------------------------------

class HatWittVector:
    """``(alpha, a, m)`` with ``a`` a unit of the ring and ``m`` an integer."""

    __slots__ = ("witt", "unit", "degree")

    def __init__(self, witt: BigWittVector, unit, degree: int):
        R = witt.ring
        unit = R.convert(unit)
        if not R.is_unit(unit):
            raise NotInvertible(f"unit component {R.format(unit)} is not invertible in {R}")
        self.witt = witt
        self.unit = unit
        self.degree = int(degree)

    @property
    def ring(self):
        return self.witt.ring

    @property
    def n(self):
        return self.witt.n

    @classmethod
    def teichmuller(cls, ring, a, n):
        return cls(BigWittVector.teichmuller(ring, a, n), a, 1)

    @classmethod
    def zero(cls, ring, n):
        return cls(BigWittVector.identity(ring, n), ring.one, 0)

    def __eq__(self, other):
        return (isinstance(other, HatWittVector) and self.witt == other.witt
                and self.ring.eq(self.unit, other.unit) and self.degree == other.degree)

    def __hash__(self):
        return hash((self.witt, self.unit, self.degree))

    def __add__(self, other):
        R = self.ring
        return HatWittVector(self.witt + other.witt, R.mul(self.unit, other.unit),
                             self.degree + other.degree)

    def __neg__(self):
        return HatWittVector(-self.witt, self.ring.inv(self.unit), -self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return hat_mul_int(self, other)
        return hat_star(self, other)

    def __repr__(self):
        return f"HatWittVector({self.witt}, unit={self.ring.format(self.unit)}, degree={self.degree})"

    def to_json(self):
        data = self.witt.to_json()
        data["unit"] = self.ring.format(self.unit)
        data["degree"] = self.degree
        return data

    @classmethod
    def from_json(cls, data, ring=None):
        w = BigWittVector.from_json(data, ring)
        return cls(w, w.ring.parse(str(data["unit"])), int(data["degree"]))


def hat_mul_int(x: HatWittVector, k: int) -> HatWittVector:
    R = x.ring
    return HatWittVector(witt_mul_int(x.witt, k), R.pow(x.unit, k), k * x.degree)


def hat_unit(ring, n):
    return HatWittVector.teichmuller(ring, ring.one, n)


def hat_star(x: HatWittVector, y: HatWittVector, engine="auto") -> HatWittVector:
    """``(a, u, m) * (b, v, k) = (a*b, u^k v^m, mk)``."""
    R = x.ring
    return HatWittVector(witt_star(x.witt, y.witt, engine),
                         R.mul(R.pow(x.unit, y.degree), R.pow(y.unit, x.degree)),
                         x.degree * y.degree)


def hat_frobenius(s: int, x: HatWittVector, engine="auto") -> HatWittVector:
    R = x.ring
    return HatWittVector(frobenius(s, x.witt, engine), R.pow(x.unit, s), x.degree)


#: ``"cycle"``: unit ``(-1)^((s-1)m) a``, matching ``div(pi(x^s))``;
#: ``"literal"``: unit ``a`` unchanged.
HAT_V_CONVENTIONS = ("cycle", "literal")


def hat_verschiebung(s: int, x: HatWittVector, convention="cycle", length=None) -> HatWittVector:
    """``V_s(alpha, a, m) = (V_s alpha, sign * a, s*m)``.

    With ``convention="cycle"`` the sign is ``(-1)^((s-1)m)``, which is what
    the cycle-level Verschiebung ``pi(x) -> pi(x^s)`` produces on the unit
    component ``(-1)^deg * pi(0)``.  ``"literal"`` keeps ``a``.
    """
    if convention not in HAT_V_CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    R = x.ring
    a = x.unit
    if convention == "cycle" and ((s - 1) * x.degree) % 2:
        a = R.neg(a)
    return HatWittVector(verschiebung(s, x.witt, length), a, s * x.degree)


def hat_vf_descend(s: int, m: int, x: HatWittVector, convention="cycle", engine="auto"):
    q = m // s
    head = HatWittVector(x.witt.truncate(s * q), x.unit, x.degree)
    return hat_verschiebung(s, hat_frobenius(s, head, engine), convention, length=m)
