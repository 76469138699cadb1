"""Coefficient rings.

A ring object carries the arithmetic; the values it operates on are plain
Python objects (``int``, ``Fraction``, tuples, polynomials).  Containers such
as polynomials and Witt vectors hold a ring together with raw values and
refuse to mix values from different rings.

>>> F5 = GF(5)
>>> F5.mul(3, 4)
2
>>> F5.inv(2)
3
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class RingMismatch(TypeError):
    """Raised when values from two different rings meet in one operation."""


class NotInvertible(ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


def check_same_ring(a, b):
    if a != b:
        raise RingMismatch(f"ring mismatch: {a} vs {b}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(m: int):
    """Return ``(p, k)`` with ``m == p**k`` or ``None``."""
    if m < 2:
        return None
    p = 2
    while p * p <= m and m % p:
        p += 1
    if m % p:
        p = m
    k, r = 0, m
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


class Ring:
    """Base class for commutative rings with identity.

    Subclasses set ``zero``, ``one``, ``tag`` and implement the primitive
    operations.  Equality of rings is structural, via ``key``.
    """

    tag = "?"
    characteristic = 0
    is_field = False
    #: True when every positive integer is invertible (a Q-algebra).
    has_rationals = False

    def key(self):
        return (type(self).__name__, self.tag)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.tag

    __str__ = __repr__

    # primitive arithmetic -------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def is_one(self, a):
        return self.eq(a, self.one)

    def is_unit(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def from_int(self, k: int):
        return self.mul_int(self.one, k)

    def mul_int(self, a, k: int):
        """``k * a`` by doubling; subclasses usually override."""
        if k < 0:
            return self.neg(self.mul_int(a, -k))
        acc, base = self.zero, a
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def from_fraction(self, q):
        """Image of a rational number whose denominator is a unit here."""
        q = Fraction(q)
        num = self.from_int(q.numerator)
        if q.denominator == 1:
            return num
        den = self.from_int(q.denominator)
        if not self.is_unit(den):
            raise NotInvertible(f"{q.denominator} is not invertible in {self}")
        return self.mul(num, self.inv(den))

    def convert(self, value):
        """Coerce an ``int``/``Fraction`` literal, pass anything else through."""
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        return value

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values):
        acc = self.one
        for v in values:
            acc = self.mul(acc, v)
        return acc

    def divide_int(self, a, k: int):
        """``a / k`` for an integer ``k`` that is a unit in this ring."""
        return self.mul(a, self.from_fraction(Fraction(1, k)))

    # text -----------------------------------------------------------------
    def format(self, a) -> str:
        return str(a)

    def is_negative(self, a) -> bool:
        """Whether the printer should show ``a`` with a leading minus."""
        return False

    def parse(self, text: str):
        from .parse import parse_element
        return parse_element(text, self)

    def random(self, rng, size=None):
        raise NotImplementedError

    def canonical(self, a):
        """Normalise a raw value (used after bulk integer evaluation)."""
        return a


class IntegerRing(Ring):
    tag = "Z"
    zero, one = 0, 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a * k

    def from_int(self, k):
        return int(k)

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise NotInvertible(f"{a} is not a unit in Z")
        return a

    def pow(self, a, k):
        if k < 0:
            return self.inv(a) ** (-k)
        return a ** k

    def is_negative(self, a):
        return a < 0

    def random(self, rng, size=None):
        size = 9 if size is None else size
        return rng.randint(-size, size)


class RationalField(Ring):
    tag = "Q"
    zero, one = Fraction(0), Fraction(1)
    is_field = True
    has_rationals = True

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a * k

    def from_int(self, k):
        return Fraction(k)

    def from_fraction(self, q):
        return Fraction(q)

    def convert(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        return value

    def canonical(self, a):
        return Fraction(a)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotInvertible("0 is not invertible in Q")
        return 1 / Fraction(a)

    def pow(self, a, k):
        return Fraction(a) ** k

    def divide_int(self, a, k):
        return a / k

    def format(self, a):
        return str(Fraction(a))

    def is_negative(self, a):
        return a < 0

    def random(self, rng, size=None):
        size = 9 if size is None else size
        return Fraction(rng.randint(-size, size), rng.randint(1, 4))


class LocalizedIntegers(Ring):
    """The integers localised at a prime: rationals with denominator prime to p."""

    zero, one = Fraction(0), Fraction(1)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.tag = f"Z({p})"

    def _guard(self, q):
        if Fraction(q).denominator % self.p == 0:
            raise NotInvertible(f"denominator of {q} is divisible by {self.p}")
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a * k

    def from_int(self, k):
        return Fraction(k)

    def from_fraction(self, q):
        return self._guard(q)

    def convert(self, value):
        if isinstance(value, (int, Fraction)):
            return self._guard(value)
        return value

    def canonical(self, a):
        return self._guard(a)

    def is_unit(self, a):
        return a != 0 and Fraction(a).numerator % self.p != 0

    def inv(self, a):
        if not self.is_unit(a):
            raise NotInvertible(f"{a} is not a unit in {self.tag}")
        return 1 / Fraction(a)

    def format(self, a):
        return str(Fraction(a))

    def is_negative(self, a):
        return a < 0

    def random(self, rng, size=None):
        size = 9 if size is None else size
        den = rng.choice([d for d in range(1, 6) if d % self.p])
        return Fraction(rng.randint(-size, size), den)


class IntegersMod(Ring):
    """Residues modulo m, stored as integers in ``range(m)``."""

    zero = 0

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        self.m = m
        self.one = 1
        self.characteristic = m
        self.tag = f"Z/{m}"
        pp = prime_power(m)
        self.prime = pp[0] if pp else None

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def mul_int(self, a, k):
        return (a * k) % self.m

    def from_int(self, k):
        return int(k) % self.m

    def canonical(self, a):
        return int(a) % self.m

    def is_unit(self, a):
        return gcd(a, self.m) == 1

    def inv(self, a):
        if gcd(a, self.m) != 1:
            raise NotInvertible(f"{a} is not a unit modulo {self.m}")
        return pow(a, -1, self.m)

    def pow(self, a, k):
        if k < 0:
            return pow(self.inv(a), -k, self.m)
        return pow(a, k, self.m)

    def random(self, rng, size=None):
        return rng.randrange(self.m)


class PrimeField(IntegersMod):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"F{p}: {p} is not prime")
        super().__init__(p)
        self.p = p
        self.tag = f"F{p}"

    def key(self):
        return ("PrimeField", self.m)


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def Zmod(m: int) -> IntegersMod:
    return IntegersMod(m)


def ZZ_local(p: int) -> LocalizedIntegers:
    return LocalizedIntegers(p)


def is_local_at(ring: Ring, p: int) -> bool:
    """Whether every integer prime to ``p`` is a unit (a Z_(p)-algebra)."""
    if ring.has_rationals:
        return True
    if isinstance(ring, LocalizedIntegers):
        return ring.p == p
    char = ring.characteristic
    if char:
        pp = prime_power(char)
        return pp is not None and pp[0] == p
    base = getattr(ring, "base", None)
    return base is not None and is_local_at(base, p)
