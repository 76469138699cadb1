"""Words and expressions in the de Rham-Witt complex of a small F_p-algebra.

The algebra ``A`` is ``F_p``, ``F_p[x]`` or ``F_p[x]/(x^N)``.  A word at
level ``n`` is

    V^{j0}[x^{k0}] * dV^{j1}[x^{k1}] * ... * dV^{jq}[x^{kq}]

stored as ``(head, tail)`` with ``head = (j0, k0)`` and ``tail`` a sorted
tuple of distinct ``(j, k)`` pairs.  Scalars of ``F_p`` are absorbed into
integer coefficients through Teichmuller lifts, since ``[c x^k] = [c][x^k]``
and ``[c]`` lies in ``W_n(F_p) = Z/p^n``.

Canonical factors satisfy ``p | k  =>  j = 0``, using
``V^j[x^{pk}] = V^j F[x^k] = p V^{j-1}[x^k]`` and the same identity under
``d``.  ``V^j[1] = p^j`` and ``dV^j[1] = 0``.  Everything else is left to
the relations of a presentation.

The weight of ``V^j[x^k]`` or ``dV^j[x^k]`` is ``k / p^j``.  Products,
``d`` and ``R`` preserve weight, ``F`` multiplies it by ``p`` and ``V``
divides it by ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exact.poly import Polynomial, PolynomialRing
from ..exact.rings import GF, is_prime
from ..witt.ptypical import PTypicalWitt

ONE = (0, 0)


def teichmuller_lift(c: int, p: int, n: int) -> int:
    """The Teichmuller representative of ``c mod p`` in ``Z/p^n``."""
    m = p ** n
    return pow(c % p, p ** (n - 1), m) if n > 0 else 0


@dataclass(frozen=True)
class MonomialAlgebra:
    """``F_p``, ``F_p[x]`` or ``F_p[x]/(x^N)``; ``var`` is ``None`` for ``F_p``."""

    p: int
    var: str | None = "x"
    trunc: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p == 2:
            raise ValueError("p must be odd")
        if self.trunc is not None and self.trunc < 1:
            raise ValueError("truncation degree must be positive")

    @property
    def tag(self):
        if self.var is None:
            return f"F{self.p}"
        base = f"F{self.p}[{self.var}]"
        return base if self.trunc is None else f"{base}/({self.var}^{self.trunc})"

    @classmethod
    def parse(cls, text: str) -> "MonomialAlgebra":
        """``F3``, ``F3[x]``, ``F3[t]/(t^4)``."""
        s = text.replace(" ", "")
        m = re.fullmatch(r"F(\d+)(?:\[([a-z])\](?:/\(\2\^(\d+)\))?)?", s)
        if not m:
            raise ValueError(f"unsupported algebra {text!r}; expected F_p, F_p[x] or F_p[x]/(x^N)")
        p = int(m.group(1))
        var = m.group(2)
        trunc = int(m.group(3)) if m.group(3) else None
        return cls(p, var, trunc)

    def allows(self, k: int) -> bool:
        """Whether ``x^k`` is a nonzero monomial of A."""
        if self.var is None:
            return k == 0
        return self.trunc is None or k < self.trunc

    @property
    def field(self):
        return GF(self.p)

    def poly_ring(self):
        return _poly_ring(self.p, self.var or "x")

    def to_poly(self, coeffs: dict) -> Polynomial:
        R = self.poly_ring()
        F = self.field
        return Polynomial(F, R.gens, {(k,): F.convert(c) for k, c in coeffs.items()})

    def reduce_poly(self, coeffs: dict) -> dict:
        p = self.p
        return {k: c % p for k, c in coeffs.items() if c % p and self.allows(k)}

    def parse_poly(self, text: str) -> dict:
        """Parse a polynomial of A into ``{exponent: coefficient}``."""
        from ..exact.parse import parse_polynomial

        src = text
        if self.var is not None:
            for alias in ("t", "x"):
                if alias != self.var:
                    src = re.sub(rf"\b{alias}\b", self.var, src)
        gens = (self.var,) if self.var else ("x",)
        f = parse_polynomial(src, self.field, gens)
        out = {}
        for e, c in f.terms.items():
            out[e[0]] = int(c)
        return self.reduce_poly(out)

    def format_monomial(self, k: int) -> str:
        if k == 0:
            return "1"
        return self.var if k == 1 else f"{self.var}^{k}"


@lru_cache(maxsize=None)
def _poly_ring(p, var):
    return PolynomialRing(GF(p), (var,))


# --- canonical words -----------------------------------------------------------------

def canonical_factor(A: MonomialAlgebra, n: int, j: int, k: int, in_tail: bool):
    """``(multiplier, (j, k))`` for one factor, or ``None`` if it vanishes."""
    if j >= n or not A.allows(k):
        return None
    if k == 0:
        return None if in_tail else (A.p ** j, ONE)
    mult = 1
    p = A.p
    while j > 0 and k % p == 0:
        j -= 1
        k //= p
        mult *= p
    return mult, (j, k)


def head_product(A: MonomialAlgebra, n: int, a, b):
    """``V^i[x^s] * V^j[x^t] = p^i V^j[x^(t + s p^(j-i))]`` for ``i <= j``."""
    if a == ONE:
        return 1, b
    if b == ONE:
        return 1, a
    (i, s), (j, t) = sorted((a, b))
    c = canonical_factor(A, n, j, t + s * A.p ** (j - i), False)
    if c is None:
        return None
    return A.p ** i * c[0], c[1]


def sort_tail(factors):
    """Sort degree-one factors; returns ``(sign, tail)`` or ``None`` on a repeat."""
    items = list(factors)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return None
    return sign, tuple(items)


def make_word(A: MonomialAlgebra, n: int, heads, tail):
    """Canonical ``(coefficient, word)`` of a product of raw heads and tail factors."""
    coef = 1
    head = ONE
    for j, k in heads:
        c = canonical_factor(A, n, j, k, False)
        if c is None:
            return None
        coef *= c[0]
        hp = head_product(A, n, head, c[1])
        if hp is None:
            return None
        coef *= hp[0]
        head = hp[1]
    canon = []
    for j, k in tail:
        c = canonical_factor(A, n, j, k, True)
        if c is None:
            return None
        coef *= c[0]
        canon.append(c[1])
    st = sort_tail(canon)
    if st is None:
        return None
    coef *= st[0]
    if coef % A.p ** n == 0:
        return None
    return coef, (head, st[1])


@lru_cache(maxsize=200000)
def word_weight(A: MonomialAlgebra, word) -> Fraction:
    head, tail = word
    p = A.p
    top = max(j for j, _ in (head,) + tail)
    return Fraction(sum(k * p ** (top - j) for j, k in (head,) + tail), p ** top)


def word_max_j(word) -> int:
    head, tail = word
    return max(j for j, _ in (head,) + tail)


def format_word(A: MonomialAlgebra, word) -> str:
    head, tail = word
    parts = []

    def v(j):
        return "" if j == 0 else ("V" if j == 1 else f"V^{j}")

    if head != ONE or not tail:
        parts.append(f"{v(head[0])}[{A.format_monomial(head[1])}]")
    for j, k in tail:
        parts.append(f"d{v(j)}[{A.format_monomial(k)}]")
    return "*".join(parts)


# --- expressions ---------------------------------------------------------------------

class DRWExpression:
    """A Z/p^n-combination of canonical words of one degree at level ``n``."""

    __slots__ = ("A", "n", "q", "terms")

    def __init__(self, A: MonomialAlgebra, n: int, q: int, terms=None):
        self.A, self.n, self.q = A, n, q
        clean = {}
        for w, c in (terms or {}).items():
            # p^(n - j) kills any word containing a V^j factor
            c %= A.p ** (n - word_max_j(w))
            if c:
                if len(w[1]) != q:
                    raise ValueError(f"word of degree {len(w[1])} in a degree-{q} expression")
                clean[w] = c
        self.terms = clean

    # construction ----------------------------------------------------------
    @classmethod
    def zero(cls, A, n, q=0):
        return cls(A, n, q)

    @classmethod
    def scalar(cls, A, n, c):
        return cls(A, n, 0, {(ONE, ()): c}) if n > 0 else cls(A, n, 0)

    @classmethod
    def word(cls, A, n, heads=(), tail=(), coef=1):
        made = make_word(A, n, heads, tail) if n > 0 else None
        q = len(tail)
        if made is None:
            return cls(A, n, q)
        c, w = made
        return cls(A, n, len(w[1]), {w: c * coef})

    @classmethod
    def teichmuller(cls, A, n, poly) -> "DRWExpression":
        """``[f]`` for ``f`` given as ``{exponent: coefficient}``."""
        if n <= 0:
            return cls(A, n, 0)
        return _witt_to_expression(A, n, [A.to_poly(A.reduce_poly(poly))])

    @classmethod
    def from_witt(cls, A, x: PTypicalWitt) -> "DRWExpression":
        """``lambda(x)`` for a p-typical Witt vector over ``F_p[x]`` (or ``F_p``)."""
        R = A.poly_ring()
        comps = [c if isinstance(c, Polynomial) else R.convert(c) for c in x.components]
        return _witt_to_expression(A, x.n, comps)

    # inspection ------------------------------------------------------------
    @property
    def p(self):
        return self.A.p

    def is_zero(self):
        return not self.terms

    def weights(self):
        return sorted({word_weight(self.A, w) for w in self.terms})

    def __eq__(self, other):
        return (isinstance(other, DRWExpression) and self.A == other.A and self.n == other.n
                and self.q == other.q and self.terms == other.terms)

    def __hash__(self):
        return hash((self.A, self.n, self.q, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        m = self.p ** self.n
        out = []
        for w in sorted(self.terms):
            c = self.terms[w]
            if c > m // 2:
                c -= m
            body = format_word(self.A, w)
            if c == 1:
                s = body
            elif c == -1:
                s = "-" + body
            else:
                s = f"{c}*{body}"
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"DRWExpression(n={self.n}, q={self.q}, {self})"

    # arithmetic --------------------------------------------------------------
    def _check(self, other):
        if self.A != other.A or self.n != other.n:
            raise ValueError("expressions live in different complexes or levels")

    def __add__(self, other):
        self._check(other)
        if self.q != other.q:
            if not other.terms:
                return self
            if not self.terms:
                return other
            raise ValueError(f"cannot add degrees {self.q} and {other.q}")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return DRWExpression(self.A, self.n, self.q, out)

    def __neg__(self):
        return DRWExpression(self.A, self.n, self.q, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int):
        return DRWExpression(self.A, self.n, self.q, {w: c * k for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = {}
        q = self.q + other.q
        for (h1, t1), c1 in self.terms.items():
            for (h2, t2), c2 in other.terms.items():
                made = make_word(self.A, self.n, (h1, h2), t1 + t2)
                if made is None:
                    continue
                c, w = made
                out[w] = out.get(w, 0) + c * c1 * c2
        return DRWExpression(self.A, self.n, q, out)

    __rmul__ = __mul__

    # operators ---------------------------------------------------------------
    def d(self):
        out = {}
        for (head, tail), c in self.terms.items():
            if head == ONE:
                continue
            made = make_word(self.A, self.n, (), (head,) + tail)
            if made is None:
                continue
            k, w = made
            out[w] = out.get(w, 0) + k * c
        return DRWExpression(self.A, self.n, self.q + 1, out)

    def F(self):
        """Frobenius to level ``n - 1``."""
        A, p, n = self.A, self.p, self.n - 1
        out = {}
        if n <= 0:
            return DRWExpression(A, max(n, 0), self.q)
        for (head, tail), c in self.terms.items():
            coef = c
            j0, k0 = head
            heads = [(j0 - 1, k0)] if j0 >= 1 else [(0, p * k0)]
            if j0 >= 1:
                coef *= p
            new_tail = []
            for j, k in tail:
                if j >= 1:
                    new_tail.append((j - 1, k))
                else:
                    heads.append((0, (p - 1) * k))
                    new_tail.append((0, k))
            made = make_word(A, n, heads, new_tail)
            if made is None:
                continue
            k, w = made
            out[w] = out.get(w, 0) + k * coef
        return DRWExpression(A, n, self.q, out)

    def V(self):
        """Verschiebung to level ``n + 1``: ``V(h * F(y)) = V(h) * y``."""
        A, n = self.A, self.n + 1
        out = {}
        for (head, tail), c in self.terms.items():
            made = make_word(A, n, [(head[0] + 1, head[1])], [(j + 1, k) for j, k in tail])
            if made is None:
                continue
            k, w = made
            out[w] = out.get(w, 0) + k * c
        return DRWExpression(A, n, self.q, out)

    def R(self):
        """Restriction to level ``n - 1``: words with some ``j >= n - 1`` die."""
        n = self.n - 1
        if n <= 0:
            return DRWExpression(self.A, max(n, 0), self.q)
        out = {w: c for w, c in self.terms.items() if word_max_j(w) < n}
        return DRWExpression(self.A, n, self.q, out)

    def iterate(self, op: str, times: int):
        e = self
        for _ in range(times):
            e = getattr(e, op)()
        return e


def _witt_to_expression(A: MonomialAlgebra, n: int, comps) -> DRWExpression:
    """``sum_j V^j[x_j]`` expanded into monomial words.

    Subtract ``sum_k omega(c_k) [x^k]`` for the monomials of ``x_0``; the
    difference has vanishing first component, so it is ``V`` of a shorter
    vector, handled recursively.
    """
    p = A.p
    if n <= 0:
        return DRWExpression(A, 0, 0)
    R = A.poly_ring()
    comps = list(comps)[:n] + [R.zero] * (n - len(comps))
    x = PTypicalWitt(R, p, comps)
    out = DRWExpression(A, n, 0)
    y = PTypicalWitt.zero(R, p, n)
    for (k,), c in sorted(comps[0].terms.items()):
        om = teichmuller_lift(int(c), p, n)
        mono = Polynomial(R.base, R.gens, {(k,): c})
        y = y + PTypicalWitt.teichmuller(R, p, mono, n)
        if A.allows(k):
            out = out + DRWExpression.word(A, n, [(0, k)], (), om)
    z = x - y
    if not R.is_zero(z.components[0]):
        raise AssertionError("Teichmuller expansion left a nonzero ghost component")
    if n > 1:
        out = out + _witt_to_expression(A, n - 1, z.components[1:]).V()
    return out


def witt_digits(c: int, p: int, n: int):
    """Witt components of ``c`` in ``W_n(F_p) = Z/p^n``: ``c = sum p^i omega(x_i)``."""
    out = []
    c %= p ** n
    for i in range(n):
        m = p ** (n - i)
        x = c % p
        out.append(x)
        c = (c - teichmuller_lift(x, p, n - i)) % m // p
    return out


def expression_to_witt(e: DRWExpression) -> PTypicalWitt:
    """Read a degree-0 expression as an element of ``W_n(A)``.

    Components are polynomials reduced modulo the truncation.
    """
    if e.q != 0:
        raise ValueError("only degree-0 expressions are Witt vectors")
    A, n, p = e.A, e.n, e.p
    R = A.poly_ring()
    acc = PTypicalWitt.zero(R, p, n)
    for ((j, k), _), c in sorted(e.terms.items()):
        # c V^j[x^k] = V^j(c [x^k]) and (c_0, c_1, ...) [a] = (c_0 a, c_1 a^p, ...)
        comps = [R.zero] * n
        for i, digit in enumerate(witt_digits(c, p, n - j)):
            if digit:
                comps[j + i] = Polynomial(R.base, R.gens, {(k * p ** i,): R.base.convert(digit)})
        acc = acc + PTypicalWitt(R, p, comps)
    trunc = [Polynomial(R.base, R.gens, {e_: v for e_, v in c.terms.items() if A.allows(e_[0])})
             for c in acc.components]
    return PTypicalWitt(R, p, trunc)


__all__ = [
    "ONE", "teichmuller_lift", "MonomialAlgebra", "canonical_factor", "head_product", "sort_tail",
    "make_word", "witt_digits", "word_weight", "word_max_j", "format_word", "DRWExpression", "expression_to_witt",
]
