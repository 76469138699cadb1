"""Text grammar for ring tags, ring elements and polynomials.

Ring tags: ``Z``, ``Q``, ``Z/9``, ``F5``, ``Z(3)``, ``F5[x]``, ``Q[x,y]``,
monogenic quotients ``F3[y]/(y^2)`` and finite products of those written
with ``*`` or ``×`` between factors.

Expressions use ``+ - * / ^`` and parentheses over integer literals and
generator names.  The printer emits terms by decreasing exponent tuple with
no zero terms, and ``parse(format(f)) == f`` holds exactly.

>>> from wittkit.exact.rings import GF
>>> f = parse_polynomial("3*x^2*y - 1", GF(5), ("x", "y"))
>>> str(f)
'3*x^2*y + 4'
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial, PolynomialRing
from .rings import (QQ, ZZ, GF, Ring, Zmod, ZZ_local, NotInvertible, is_prime)


class ParseError(ValueError):
    """Malformed ring tag or expression."""


# --- printing ----------------------------------------------------------------

def _monomial(gens, e):
    parts = []
    for g, k in zip(gens, e):
        if k == 1:
            parts.append(g)
        elif k:
            parts.append(f"{g}^{k}")
    return "*".join(parts)


def _coefficient_text(R: Ring, c):
    """Return ``(negative, magnitude is one, unsigned text)`` for a coefficient."""
    if isinstance(c, Polynomial):
        neg = len(c.terms) == 1 and c.ring.is_negative(next(iter(c.terms.values())))
        mag = -c if neg else c
        text = str(mag) if len(mag.terms) == 1 else f"({mag})"
        return neg, mag == mag.const_like(1), text
    neg = R.is_negative(c)
    mag = R.neg(c) if neg else c
    text = R.format(mag)
    if " " in text and not text.startswith("("):
        text = f"({text})"
    return neg, R.is_one(mag), text


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    R = f.ring
    pieces = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        mono = _monomial(f.gens, e)
        neg, is_one, text = _coefficient_text(R, c)
        if not mono:
            body = text
        elif is_one:
            body = mono
        else:
            body = f"{text}*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# --- tokenizer and expression evaluator ----------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text: str):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot tokenize {text[pos:]!r}")
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            if sym == "−":
                sym = "-"
            if sym == "·":
                sym = "*"
            if sym == "**":
                sym = "^"
            out.append(("sym", sym))
        pos = m.end()
    # fold "**" into "^"
    folded = []
    for tok in out:
        if tok == ("sym", "*") and folded and folded[-1] == ("sym", "*"):
            folded[-1] = ("sym", "^")
        else:
            folded.append(tok)
    return folded


class _Parser:
    """Recursive descent; ``resolve(name)`` maps identifiers to values."""

    def __init__(self, tokens, make_int, resolve, divide):
        self.toks = tokens
        self.i = 0
        self.make_int = make_int
        self.resolve = resolve
        self.divide = divide

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input")
        if sym is not None and tok != ("sym", sym):
            raise ParseError(f"expected {sym!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else self.divide(value, rhs)
        return value

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            neg = False
            if self.peek() == ("sym", "-"):
                self.take()
                neg = True
            kind, k = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            if neg:
                raise ParseError("negative exponents are not supported here")
            base = base ** k
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.make_int(val)
        if kind == "name":
            return self.resolve(val)
        if val == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {val!r}")


def _resolver(ring: Ring, gens):
    """Identifier lookup: own generators first, then generators of the
    coefficient ring (as constants)."""
    def resolve(name):
        if name in gens:
            return Polynomial.gen(ring, gens, name)
        inner = _coefficient_generator(ring, name)
        if inner is not None:
            return Polynomial.constant(ring, gens, inner)
        raise ParseError(f"unknown identifier {name!r} for {ring}{list(gens) if gens else ''}")
    return resolve


def _coefficient_generator(ring: Ring, name):
    if isinstance(ring, PolynomialRing) and name in ring.gens:
        return ring.gen(name)
    element_of = getattr(ring, "generator_named", None)
    if element_of is not None:
        return element_of(name)
    return None


def _divider(ring: Ring):
    def divide(a: Polynomial, b: Polynomial):
        if not b.is_constant() or not b.terms:
            raise ParseError("division only by nonzero constants")
        c = b.constant_term()
        try:
            return a.scale(ring.inv(c))
        except NotInvertible as exc:
            raise ParseError(str(exc)) from None
    return divide


def parse_polynomial(text: str, ring: Ring, gens) -> Polynomial:
    """Parse ``text`` as a polynomial over ``ring`` in ``gens``."""
    gens = tuple(gens)
    parser = _Parser(tokenize(text),
                     lambda k: Polynomial.constant(ring, gens, k),
                     _resolver(ring, gens), _divider(ring))
    return parser.parse()


def parse_element(text: str, ring: Ring):
    """Parse a raw element of ``ring``."""
    if isinstance(ring, PolynomialRing):
        return parse_polynomial(text, ring.base, ring.gens)
    custom = getattr(ring, "parse_element", None)
    if custom is not None:
        return custom(text)
    return parse_polynomial(text, ring, ()).constant_term()


# --- ring tags -----------------------------------------------------------------

_BASE = re.compile(r"^(?:Z|Q|Z/(\d+)|F(\d+)|Z\((\d+)\))$")


def _split_top(text, seps):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_base_ring(tag: str) -> Ring:
    tag = tag.strip()
    m = _BASE.match(tag)
    if not m:
        raise ParseError(f"unknown ring tag {tag!r}")
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    mod, p, loc = m.groups()
    try:
        if mod is not None:
            return Zmod(int(mod))
        if p is not None:
            if not is_prime(int(p)):
                raise ParseError(f"F{p}: {p} is not prime")
            return GF(int(p))
        return ZZ_local(int(loc))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _split_quotient(tag):
    """``(ring, relation)`` for ``R[x]/(f)``: the last top-level slash
    followed by one parenthesised group."""
    if not tag.endswith(")"):
        return None
    depth = 0
    for i in range(len(tag) - 1, -1, -1):
        ch = tag[i]
        if ch in ")]":
            depth += 1
        elif ch in "([":
            depth -= 1
            if depth == 0:
                if i > 0 and tag[i - 1] == "/" and tag[:i - 1].endswith("]"):
                    return tag[:i - 1], tag[i + 1:-1]
                return None
    return None


_POLY = re.compile(r"^(.*?)\[([A-Za-z_][A-Za-z_0-9]*(?:\s*,\s*[A-Za-z_][A-Za-z_0-9]*)*)\]$")


def parse_ring(tag: str) -> Ring:
    """Parse a ring tag.

    >>> parse_ring("F5[x]")
    F5[x]
    >>> parse_ring("Z/9").m
    9
    """
    tag = tag.strip()
    if not tag:
        raise ParseError("empty ring tag")
    factors = _split_top(tag, "*×")
    if len(factors) > 1:
        from .algebra import product_algebra
        return product_algebra([parse_ring(f) for f in factors])
    quotient = _split_quotient(tag)
    if quotient is not None:
        from .algebra import monogenic_algebra
        outer = parse_ring(quotient[0])
        if not isinstance(outer, PolynomialRing) or len(outer.gens) != 1:
            raise ParseError(f"quotient needs a univariate polynomial ring: {tag!r}")
        f = parse_polynomial(quotient[1], outer.base, outer.gens)
        try:
            return monogenic_algebra(outer.base, f)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    m = _POLY.match(tag)
    if m:
        base = parse_ring(m.group(1))
        gens = tuple(g.strip() for g in m.group(2).split(","))
        if len(set(gens)) != len(gens):
            raise ParseError(f"repeated generator in {tag!r}")
        return PolynomialRing(base, gens)
    return parse_base_ring(tag)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
