"""Universal integer polynomials for big Witt vector operations.

The star product and the Frobenius are computed once symbolically over Q
through ghost coordinates; every coefficient is asserted to be an integer,
after which the polynomials evaluate over any commutative ring.  Tables are
cached per size and never mutated after construction.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from ..exact.poly import Polynomial, PolynomialRing
from ..exact.rings import QQ, ZZ, IntegerRing, IntegersMod, LocalizedIntegers, RationalField

#: Largest sizes served from tables; beyond these the coordinate engine is used.
STAR_TABLE_MAX_N = 6
FROBENIUS_TABLE_MAX_S = 4
FROBENIUS_TABLE_MAX_N = 6

_lock = threading.Lock()


class IntegralityError(AssertionError):
    """A universal polynomial acquired a non-integer coefficient."""


def symbolic_ghost(coeffs):
    """Ghost components of ``1 + sum a_k t^k`` with polynomial entries.

    ``g_k = -k a_k - sum_{i<k} g_i a_{k-i}`` needs no division.
    """
    g = []
    for k in range(1, len(coeffs) + 1):
        acc = coeffs[k - 1] * (-k)
        for i in range(1, k):
            acc = acc - g[i - 1] * coeffs[k - i - 1]
        g.append(acc)
    return g


def symbolic_unghost(ghosts):
    """Inverse of :func:`symbolic_ghost` over a Q-algebra."""
    a = []
    for k in range(1, len(ghosts) + 1):
        acc = ghosts[k - 1]
        for i in range(1, k):
            acc = acc + ghosts[i - 1] * a[k - i - 1]
        a.append(acc.scale(Fraction(-1, k)))
    return a


def to_integer_polynomial(f: Polynomial, what: str) -> Polynomial:
    out = {}
    for e, c in f.terms.items():
        if Fraction(c).denominator != 1:
            raise IntegralityError(f"{what}: coefficient {c} is not an integer")
        out[e] = int(c)
    return Polynomial(ZZ, f.gens, out)


class CompiledPolynomials:
    """A list of integer polynomials evaluable on raw ring values."""

    def __init__(self, polys, arg_names):
        self.polys = tuple(polys)
        self.arg_names = tuple(arg_names)
        self._fast = None

    @property
    def term_counts(self):
        return tuple(len(f.terms) for f in self.polys)

    def _compile(self):
        names = self.arg_names
        lines = [f"def _f({', '.join(names)}):"]
        for idx, f in enumerate(self.polys):
            lines.append(f"    r{idx} = 0")
            terms = []
            for e, c in f.terms.items():
                factors = [str(c)]
                for name, k in zip(names, e):
                    if k == 1:
                        factors.append(name)
                    elif k:
                        factors.append(f"{name}**{k}")
                terms.append("*".join(factors))
            # short statements keep the compiler's recursion shallow
            for i in range(0, len(terms), 40):
                lines.append(f"    r{idx} += " + " + ".join(terms[i:i + 40]))
        lines.append(f"    return ({''.join(f'r{i}, ' for i in range(len(self.polys)))})")
        scope = {}
        exec(compile("\n".join(lines), "<universal polynomials>", "exec"), scope)
        return scope["_f"]

    def evaluate(self, R, values):
        """Evaluate at raw values of ``R`` (one per argument name)."""
        if _fast_ring(R):
            if self._fast is None:
                self._fast = self._compile()
            raw = self._fast(*values)
            return tuple(R.canonical(v) for v in raw)
        return tuple(_evaluate_generic(R, f, values) for f in self.polys)


def _fast_ring(R):
    # raw values whose Python operators implement the ring operations
    return isinstance(R, (IntegerRing, IntegersMod, RationalField, LocalizedIntegers))


def _evaluate_generic(R, f, values):
    powers = {}
    acc = R.zero
    for e, c in f.terms.items():
        t = R.from_int(c)
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                if key not in powers:
                    powers[key] = R.pow(values[i], k)
                t = R.mul(t, powers[key])
        acc = R.add(acc, t)
    return acc


@lru_cache(maxsize=None)
def _star_table(n: int) -> CompiledPolynomials:
    a_names = [f"a{i}" for i in range(1, n + 1)]
    b_names = [f"b{i}" for i in range(1, n + 1)]
    gens = tuple(a_names + b_names)
    a = [Polynomial.gen(QQ, gens, x) for x in a_names]
    b = [Polynomial.gen(QQ, gens, x) for x in b_names]
    ga, gb = symbolic_ghost(a), symbolic_ghost(b)
    c = symbolic_unghost([x * y for x, y in zip(ga, gb)])
    polys = [to_integer_polynomial(f, f"star c{k + 1} (n={n})") for k, f in enumerate(c)]
    return CompiledPolynomials(polys, gens)


@lru_cache(maxsize=None)
def _frobenius_table(s: int, n: int) -> CompiledPolynomials:
    names = tuple(f"a{i}" for i in range(1, s * n + 1))
    a = [Polynomial.gen(QQ, names, x) for x in names]
    g = symbolic_ghost(a)
    c = symbolic_unghost([g[s * k - 1] for k in range(1, n + 1)])
    polys = [to_integer_polynomial(f, f"F_{s} c{k + 1} (n={n})") for k, f in enumerate(c)]
    return CompiledPolynomials(polys, names)


def star_table(n: int) -> CompiledPolynomials:
    """Universal polynomials ``c_1..c_n`` of the star product at length n."""
    with _lock:
        return _star_table(n)


def frobenius_table(s: int, n: int) -> CompiledPolynomials:
    """Universal polynomials of ``F_s: W_{sn} -> W_n``."""
    with _lock:
        return _frobenius_table(s, n)


def build_all_tables(max_n=STAR_TABLE_MAX_N, max_s=FROBENIUS_TABLE_MAX_S):
    """Build (and integrality-check) every table in range; returns term counts."""
    report = {}
    for n in range(1, max_n + 1):
        report[("star", n)] = star_table(n).term_counts
        for s in range(1, max_s + 1):
            report[(f"F{s}", n)] = frobenius_table(s, n).term_counts
    return report


def star_polynomial_ring(n: int) -> PolynomialRing:
    return PolynomialRing(ZZ, [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)])
