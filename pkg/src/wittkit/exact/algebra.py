"""Finite free commutative algebras over a base ring.

An algebra of rank d is given by a basis, structure constants
``e_i * e_j = sum_k table[i][j][k] e_k`` and the coordinates of the unit.
Elements are tuples of base-ring values; the algebra is itself a
:class:`Ring`, so polynomials, series and Witt vectors can be built over it.
"""

from __future__ import annotations

from .matrix import ExactMatrix, berkowitz
from .poly import Polynomial, PolynomialRing
from .rings import NotInvertible, Ring


class FiniteFreeAlgebra(Ring):
    def __init__(self, base: Ring, labels, table, unit, tag=None, check=True):
        self.base = base
        self.labels = tuple(labels)
        d = len(self.labels)
        self.rank = d
        self.table = tuple(tuple(tuple(base.convert(c) for c in table[i][j])
                                 for j in range(d)) for i in range(d))
        self.zero = (base.zero,) * d
        self.one = tuple(base.convert(c) for c in unit)
        self.characteristic = base.characteristic
        self.has_rationals = base.has_rationals
        self.tag = tag or f"{base.tag}<{','.join(self.labels)}>"
        self._sparse = [[[(k, c) for k, c in enumerate(self.table[i][j]) if not base.is_zero(c)]
                         for j in range(d)] for i in range(d)]
        if check:
            self.validate()

    def key(self):
        return ("FiniteFreeAlgebra", self.base.key(), self.labels, self.table, self.one)

    # construction checks -----------------------------------------------------
    def basis_element(self, i):
        B = self.base
        return tuple(B.one if k == i else B.zero for k in range(self.rank))

    def validate(self):
        """Assert commutativity, associativity and the unit law on the basis."""
        d = self.rank
        basis = [self.basis_element(i) for i in range(d)]
        for i in range(d):
            if not self.eq(self.mul(self.one, basis[i]), basis[i]):
                raise ValueError("unit does not act as the identity")
            for j in range(d):
                if not self.eq(self.table[i][j], self.table[j][i]):
                    raise ValueError("structure constants are not commutative")
                for k in range(d):
                    lhs = self.mul(self.mul(basis[i], basis[j]), basis[k])
                    rhs = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    if not self.eq(lhs, rhs):
                        raise ValueError("structure constants are not associative")

    # ring interface -------------------------------------------------------------
    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        out = [B.zero] * self.rank
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            row = self._sparse[i]
            for j, y in enumerate(b):
                if B.is_zero(y):
                    continue
                xy = B.mul(x, y)
                for k, c in row[j]:
                    out[k] = B.add(out[k], B.mul(xy, c))
        return tuple(out)

    def scalar(self, c, a):
        B = self.base
        return tuple(B.mul(c, x) for x in a)

    def mul_int(self, a, k):
        return tuple(self.base.mul_int(x, k) for x in a)

    def from_int(self, k):
        return self.scalar(self.base.from_int(k), self.one)

    def from_base(self, c):
        return self.scalar(c, self.one)

    def from_fraction(self, q):
        return self.scalar(self.base.from_fraction(q), self.one)

    def convert(self, value):
        if isinstance(value, tuple):
            if len(value) != self.rank:
                raise ValueError(f"expected {self.rank} coordinates")
            return value
        return self.from_base(self.base.convert(value))

    def eq(self, a, b):
        B = self.base
        return all(B.eq(x, y) for x, y in zip(a, b))

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def canonical(self, a):
        return tuple(self.base.canonical(x) for x in a)

    def is_unit(self, a):
        return self.base.is_unit(self.norm(a))

    def inv(self, a):
        # Cayley-Hamilton: b^d + c_{d-1} b^{d-1} + ... + c_0 = 0
        B = self.base
        coeffs = self.char_coeffs(a)
        c0 = coeffs[0]
        if not B.is_unit(c0):
            raise NotInvertible(f"{self.format(a)} is not a unit in {self.tag}")
        acc = self.zero
        for c in reversed(coeffs[1:]):
            acc = self.add(self.mul(acc, a), self.from_base(c))
        return self.scalar(B.neg(B.inv(c0)), acc)

    def random(self, rng, size=None):
        return tuple(self.base.random(rng, size) for _ in range(self.rank))

    def format(self, a):
        return "(" + ", ".join(self.base.format(x) for x in a) + ")"

    # linear algebra -------------------------------------------------------------
    def mult_matrix(self, b) -> ExactMatrix:
        """Matrix of multiplication by ``b``; column j holds ``b*e_j``."""
        cols = [self.mul(b, self.basis_element(j)) for j in range(self.rank)]
        return ExactMatrix(self.base, [[cols[j][i] for j in range(self.rank)]
                                       for i in range(self.rank)], self.rank)

    def char_coeffs(self, b):
        return berkowitz(self.base, self.mult_matrix(b).rows)

    def trace(self, b):
        return self.base.neg(self.char_coeffs(b)[-2]) if self.rank else self.base.zero

    def norm(self, b):
        c0 = self.char_coeffs(b)[0]
        return c0 if self.rank % 2 == 0 else self.base.neg(c0)

    def map_base(self, ring: Ring, fn, tag=None):
        """Base change along a ring map ``fn`` of raw values."""
        table = [[[fn(c) for c in self.table[i][j]] for j in range(self.rank)]
                 for i in range(self.rank)]
        return FiniteFreeAlgebra(ring, self.labels, table, [fn(c) for c in self.one],
                                 tag=tag, check=False)

    def map_element(self, fn, a):
        return tuple(fn(x) for x in a)

    def change_basis(self, P):
        """Algebra with basis ``f_j = sum_i P[i][j] e_i`` (P invertible).

        Returns ``(algebra, to_new)`` where ``to_new`` maps old coordinates
        to new ones.
        """
        B, d = self.base, self.rank
        Pinv = invert_matrix(B, P)

        def to_new(v):
            return tuple(B.sum(B.mul(Pinv[i][k], v[k]) for k in range(d)) for i in range(d))

        fs = [tuple(P[i][j] for i in range(d)) for j in range(d)]
        table = [[to_new(self.mul(fs[i], fs[j])) for j in range(d)] for i in range(d)]
        labels = tuple(f"f{j + 1}" for j in range(d))
        return FiniteFreeAlgebra(B, labels, table, to_new(self.one)), to_new


def invert_matrix(R: Ring, P):
    """Inverse of a square matrix over a commutative ring via Cayley-Hamilton."""
    d = len(P)
    coeffs = berkowitz(R, P)
    c0 = coeffs[0]
    if not R.is_unit(c0):
        raise NotInvertible("matrix is not invertible")

    def matmul(X, Y):
        return [[R.sum(R.mul(X[i][k], Y[k][j]) for k in range(d)) for j in range(d)]
                for i in range(d)]

    acc = [[R.zero] * d for _ in range(d)]
    for c in reversed(coeffs[1:]):
        acc = matmul(acc, P)
        for i in range(d):
            acc[i][i] = R.add(acc[i][i], c)
    scale = R.neg(R.inv(c0))
    return [[R.mul(scale, x) for x in row] for row in acc]


class MonogenicAlgebra(FiniteFreeAlgebra):
    """``base[x]/(f)`` for monic f, with basis 1, x, ..., x^(d-1)."""

    def __init__(self, base: Ring, f: Polynomial, tag=None):
        if f.nvars != 1:
            raise ValueError("monogenic algebra needs a univariate polynomial")
        d = f.degree()
        if d < 1:
            raise ValueError("defining polynomial must have degree at least 1")
        if not base.is_one(f.leading_coeff()):
            raise ValueError("defining polynomial must be monic")
        self.var = f.gens[0]
        self.modulus = f
        low = f.dense()[:d]
        self._reduction = [base.neg(c) for c in low]  # x^d = sum red[k] x^k
        powers = [tuple(base.one if k == i else base.zero for k in range(d)) for i in range(d)]
        x_pow = powers[-1]
        for _ in range(d - 1):
            x_pow = self._times_x(base, x_pow)
            powers.append(x_pow)
        table = [[powers[i + j] for j in range(d)] for i in range(d)]
        labels = ["1", self.var] + [f"{self.var}^{k}" for k in range(2, d)]
        super().__init__(base, labels[:d], table, powers[0],
                         tag=tag or f"{base.tag}[{self.var}]/({f})", check=False)

    def _times_x(self, base, v):
        d = len(v)
        top = v[-1]
        out = [base.zero] + list(v[:-1])
        return tuple(base.add(out[k], base.mul(top, self._reduction[k])) for k in range(d))

    def key(self):
        return ("MonogenicAlgebra", self.base.key(), self.var, self.modulus)

    def generator(self):
        return self.basis_element(1) if self.rank > 1 else (self.base.neg(self.modulus.constant_term()),)

    def generator_named(self, name):
        if name == self.var:
            return self.generator()
        return None

    def from_polynomial(self, g: Polynomial):
        """Image of a polynomial in the generator."""
        acc = self.zero
        x = self.generator()
        for c in reversed(g.dense() if g.terms else []):
            acc = self.add(self.mul(acc, x), self.from_base(c))
        return acc

    def as_polynomial(self, a) -> Polynomial:
        return Polynomial.from_dense(self.base, list(a), self.var)

    def evaluate_at(self, a, point):
        """Evaluate the polynomial representative of ``a`` at a base value."""
        return self.as_polynomial(a).evaluate((point,))

    def parse_element(self, text):
        from .parse import parse_polynomial
        return self.from_polynomial(parse_polynomial(text, self.base, (self.var,)))

    def format(self, a):
        return str(self.as_polynomial(a))

    def is_negative(self, a):
        return False


def monogenic_algebra(base: Ring, f: Polynomial) -> MonogenicAlgebra:
    return MonogenicAlgebra(base, f)


class ProductAlgebra(FiniteFreeAlgebra):
    """Finite product ``B_1 x ... x B_k`` of algebras over a common base."""

    def __init__(self, factors):
        factors = list(factors)
        base = factors[0].base
        if any(f.base != base for f in factors):
            raise ValueError("product factors must share a base ring")
        self.factors = tuple(factors)
        self.offsets = []
        off = 0
        for f in factors:
            self.offsets.append(off)
            off += f.rank
        d = off
        table = [[[base.zero] * d for _ in range(d)] for _ in range(d)]
        unit = []
        labels = []
        for idx, (f, o) in enumerate(zip(factors, self.offsets)):
            for i in range(f.rank):
                labels.append(f"{f.labels[i]}@{idx + 1}")
                for j in range(f.rank):
                    for k, c in enumerate(f.table[i][j]):
                        table[o + i][o + j][o + k] = c
            unit.extend(f.one)
        super().__init__(base, labels, table, unit,
                         tag=" * ".join(f.tag for f in factors), check=False)

    def key(self):
        return ("ProductAlgebra", tuple(f.key() for f in self.factors))

    def split(self, a):
        return tuple(tuple(a[o:o + f.rank]) for f, o in zip(self.factors, self.offsets))

    def join(self, parts):
        out = []
        for p in parts:
            out.extend(p)
        return tuple(out)

    def parse_element(self, text):
        from .parse import ParseError, _split_top
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError("product algebra elements are written (b1, ..., bk)")
        parts = _split_top(text[1:-1], ",")
        if len(parts) != len(self.factors):
            raise ParseError(f"expected {len(self.factors)} components")
        return self.join(f.parse(t) for f, t in zip(self.factors, parts))

    def format(self, a):
        return "(" + ", ".join(f.format(x) for f, x in zip(self.factors, self.split(a))) + ")"


def as_algebra(ring: Ring) -> FiniteFreeAlgebra:
    """View a base ring as the rank-one algebra over itself."""
    if isinstance(ring, FiniteFreeAlgebra):
        return ring
    return FiniteFreeAlgebra(ring, ["1"], [[[ring.one]]], [ring.one], tag=f"{ring.tag}", check=False)


def product_algebra(factors) -> ProductAlgebra:
    return ProductAlgebra([as_algebra(f) for f in factors])


def mult_char_poly(B: FiniteFreeAlgebra, b, var="y") -> Polynomial:
    """Characteristic polynomial of multiplication by ``b``, monic in ``var``.

    >>> from wittkit.exact.rings import GF
    >>> from wittkit.exact.parse import parse_ring
    >>> B = parse_ring("F5[x]/(x^2 + 1)")
    >>> str(mult_char_poly(B, B.parse("x + 1")))
    'y^2 + 3*y + 2'
    """
    if not isinstance(b, tuple) or len(b) != B.rank:
        raise ValueError("element is not expressible in the stored basis")
    return Polynomial.from_dense(B.base, B.char_coeffs(b), var)


def is_polynomial_ring(ring) -> bool:
    return isinstance(ring, PolynomialRing)
