"""Sparse multivariate polynomials over an exact coefficient ring."""

from __future__ import annotations

from fractions import Fraction

from .rings import Ring, RingMismatch, NotInvertible

#: Degree reported for the zero polynomial.
DEGREE_OF_ZERO = -1


class Polynomial:
    """A polynomial in named generators with coefficients in ``ring``.

    ``terms`` maps exponent tuples to raw coefficients of ``ring``; zero
    coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("ring", "gens", "terms", "_hash")

    def __init__(self, ring: Ring, gens, terms=None):
        self.ring = ring
        self.gens = tuple(gens)
        clean = {}
        if terms:
            is_zero = ring.is_zero
            for e, c in terms.items():
                if not is_zero(c):
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def _raw(cls, ring, gens, terms):
        obj = cls.__new__(cls)
        obj.ring, obj.gens, obj.terms, obj._hash = ring, gens, terms, None
        return obj

    @classmethod
    def constant(cls, ring, gens, c):
        gens = tuple(gens)
        return cls(ring, gens, {(0,) * len(gens): ring.convert(c)})

    @classmethod
    def gen(cls, ring, gens, name):
        gens = tuple(gens)
        e = tuple(1 if g == name else 0 for g in gens)
        if sum(e) != 1:
            raise ValueError(f"unknown generator {name!r}")
        return cls(ring, gens, {e: ring.one})

    @classmethod
    def from_dense(cls, ring, coeffs, var="x"):
        """Univariate polynomial from coefficients listed low degree first."""
        return cls(ring, (var,), {(i,): c for i, c in enumerate(coeffs)})

    def zero_like(self):
        return Polynomial._raw(self.ring, self.gens, {})

    def const_like(self, c):
        return Polynomial.constant(self.ring, self.gens, c)

    # basic queries ----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def nvars(self):
        return len(self.gens)

    def var_index(self, var):
        if isinstance(var, int):
            return var
        return self.gens.index(var)

    def degree(self, var=None) -> int:
        if not self.terms:
            return DEGREE_OF_ZERO
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.var_index(var)
        return max(e[i] for e in self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.zero)

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def is_monic(self, var=None):
        if var is None and self.nvars == 1:
            var = 0
        return self.ring.is_one(self.leading_coeff(var))

    def leading_coeff(self, var=None):
        """Leading coefficient; for a univariate polynomial a raw value,
        otherwise a polynomial in the remaining generators."""
        if not self.terms:
            return self.ring.zero
        if var is None:
            if self.nvars != 1:
                e = max(self.terms)
                return self.terms[e]
            var = 0
        if self.nvars == 1:
            return self.terms[(self.degree(0),)]
        return self.coefficients_in(var)[-1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.ring == other.ring and self.gens == other.gens
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)):
            return self == self.const_like(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.gens, frozenset(self.terms.items())))
        return self._hash

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring or other.gens != self.gens:
                raise RingMismatch(
                    f"polynomial mismatch: {self.ring}{list(self.gens)} vs "
                    f"{other.ring}{list(other.gens)}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.const_like(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = R.add(out[e], c)
                if R.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Polynomial._raw(R, self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return Polynomial._raw(R, self.gens, {e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        R = self.ring
        add, mul, is_zero = R.add, R.mul, R.is_zero
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                if e in out:
                    out[e] = add(out[e], c)
                else:
                    out[e] = c
        return Polynomial._raw(R, self.gens, {e: c for e, c in out.items() if not is_zero(c)})

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a raw coefficient of the ring."""
        R = self.ring
        c = R.convert(c)
        out = {}
        for e, v in self.terms.items():
            w = R.mul(v, c)
            if not R.is_zero(w):
                out[e] = w
        return Polynomial._raw(R, self.gens, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.const_like(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps):
        """Multiply by the monomial with exponent tuple ``exps``."""
        exps = tuple(exps)
        return Polynomial._raw(self.ring, self.gens,
                               {tuple(a + b for a, b in zip(e, exps)): c
                                for e, c in self.terms.items()})

    # structure ----------------------------------------------------------------
    def coefficients_in(self, var):
        """Dense list of coefficients in ``var`` (low degree first); each entry
        is a polynomial in the same generators not involving ``var``."""
        i = self.var_index(var)
        deg = self.degree(i)
        buckets = [dict() for _ in range(max(deg, -1) + 1)]
        for e, c in self.terms.items():
            k = e[i]
            buckets[k][e[:i] + (0,) + e[i + 1:]] = c
        return [Polynomial._raw(self.ring, self.gens, b) for b in buckets]

    @classmethod
    def from_coefficients_in(cls, coeffs, var):
        """Inverse of :meth:`coefficients_in`."""
        first = coeffs[0]
        i = first.var_index(var)
        out = {}
        for k, c in enumerate(coeffs):
            for e, v in c.terms.items():
                out[e[:i] + (e[i] + k,) + e[i + 1:]] = v
        return cls._raw(first.ring, first.gens, out)

    def dense(self):
        """Coefficient list of a univariate polynomial, low degree first."""
        if self.nvars != 1:
            raise ValueError("dense() needs a univariate polynomial")
        R = self.ring
        out = [R.zero] * (self.degree() + 1)
        for (k,), c in self.terms.items():
            out[k] = c
        return out

    def map_coeffs(self, ring: Ring, fn):
        """Apply a ring map ``fn`` to every coefficient, landing in ``ring``."""
        return Polynomial(ring, self.gens, {e: fn(c) for e, c in self.terms.items()})

    def rename(self, gens):
        return Polynomial._raw(self.ring, tuple(gens), dict(self.terms))

    def embed(self, gens):
        """View as a polynomial in a larger generator tuple."""
        gens = tuple(gens)
        idx = [gens.index(g) for g in self.gens]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(gens)
            for j, k in zip(idx, e):
                f[j] = k
            out[tuple(f)] = c
        return Polynomial._raw(self.ring, gens, out)

    def drop(self, gens):
        """Reinterpret in fewer generators; the dropped ones must be absent."""
        gens = tuple(gens)
        idx = [self.gens.index(g) for g in gens]
        keep = set(idx)
        out = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j not in keep):
                raise ValueError("polynomial involves a dropped generator")
            out[tuple(e[j] for j in idx)] = c
        return Polynomial._raw(self.ring, gens, out)

    def used_gens(self):
        return tuple(g for i, g in enumerate(self.gens)
                     if any(e[i] for e in self.terms))

    def subs(self, values: dict):
        """Substitute generators by polynomials (same ring and gens) or scalars."""
        R = self.ring
        idx = {self.var_index(k): v for k, v in values.items()}
        powers = {}
        result = self.zero_like()
        for e, c in self.terms.items():
            mono = Polynomial._raw(R, self.gens, {tuple(0 if i in idx else k for i, k in enumerate(e)): c})
            for i, val in idx.items():
                k = e[i]
                if k == 0:
                    continue
                if (i, k) not in powers:
                    v = val if isinstance(val, Polynomial) else self.const_like(val)
                    powers[(i, k)] = v ** k
                mono = mono * powers[(i, k)]
            result = result + mono
        return result

    def evaluate(self, point):
        """Evaluate at raw ring values (one per generator)."""
        R = self.ring
        acc = R.zero
        for e, c in self.terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t = R.mul(t, R.pow(v, k))
            acc = R.add(acc, t)
        return acc

    def diff(self, var):
        i = self.var_index(var)
        R = self.ring
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                v = R.mul_int(c, k)
                if not R.is_zero(v):
                    out[e[:i] + (k - 1,) + e[i + 1:]] = v
        return Polynomial._raw(R, self.gens, out)

    def monic(self, var=None):
        lc = self.leading_coeff(var)
        if isinstance(lc, Polynomial):
            if not lc.is_constant():
                raise NotInvertible("leading coefficient is not a constant")
            lc = lc.constant_term()
        return self.scale(self.ring.inv(lc))

    def reverse(self, degree=None):
        """``x^d f(1/x)`` for a univariate polynomial."""
        d = self.degree() if degree is None else degree
        return Polynomial._raw(self.ring, self.gens, {(d - k,): c for (k,), c in self.terms.items()})

    # printing ---------------------------------------------------------------
    def __str__(self):
        from .parse import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring}, {list(self.gens)}, {str(self)!r})"


class PolynomialRing(Ring):
    """``base[gens]`` as a ring whose values are :class:`Polynomial` objects."""

    def __init__(self, base: Ring, gens):
        self.base = base
        self.gens = tuple(gens)
        self.tag = f"{base.tag}[{','.join(self.gens)}]"
        self.zero = Polynomial(base, self.gens)
        self.one = Polynomial.constant(base, self.gens, 1)
        self.characteristic = base.characteristic
        self.has_rationals = base.has_rationals

    def key(self):
        return ("PolynomialRing", self.base.key(), self.gens)

    def gen(self, name):
        return Polynomial.gen(self.base, self.gens, name)

    def from_int(self, k):
        return Polynomial.constant(self.base, self.gens, k)

    def from_fraction(self, q):
        return Polynomial.constant(self.base, self.gens, self.base.from_fraction(q))

    def convert(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(self.base, self.gens, self.base.convert(value))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a.scale(self.base.from_int(k))

    def pow(self, a, k):
        if k < 0:
            return self.inv(a) ** (-k)
        return a ** k

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return not a.terms

    def is_unit(self, a):
        # exact for coefficient fields and for reduced bases; constants only
        return a.is_constant() and a.terms and self.base.is_unit(a.constant_term())

    def inv(self, a):
        if not self.is_unit(a):
            raise NotInvertible(f"{a} is not a unit in {self.tag}")
        return Polynomial.constant(self.base, self.gens, self.base.inv(a.constant_term()))

    def format(self, a):
        return str(a)

    def random(self, rng, size=None):
        degree = 2 if size is None else size
        terms = {}
        for _ in range(degree + 1):
            e = tuple(rng.randint(0, degree) for _ in self.gens)
            terms[e] = self.base.random(rng)
        return Polynomial(self.base, self.gens, terms)
