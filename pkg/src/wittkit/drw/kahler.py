"""Kahler differentials of ``Z/m[x_1..x_r]`` modulo monomial truncations.

An element of ``Omega^q`` is a dict ``I -> {alpha: c}`` where ``I`` is a
sorted tuple of ``q`` distinct variable indices (the wedge ``dx_I``) and
``{alpha: c}`` a polynomial.  Truncations ``x_i^{N_i} = 0`` also impose
``N_i x_i^{N_i - 1} dx_i = 0``, so the coefficient of ``x_i^{N_i - 1}``
in any wedge containing ``dx_i`` lives in ``Z/gcd(m, N_i)``.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd


class KahlerModule:
    """``Omega^*`` of a truncated polynomial ring with its differential."""

    def __init__(self, m: int, gens=("x",), trunc=None):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        self.m = m
        self.gens = tuple(gens)
        self.r = len(self.gens)
        trunc = dict(trunc or {})
        self.trunc = tuple(trunc.get(g) for g in self.gens)

    # normal form -------------------------------------------------------------
    def _coeff_modulus(self, wedge, alpha):
        mod = self.m
        for i in wedge:
            N = self.trunc[i]
            if N is not None and alpha[i] == N - 1:
                mod = gcd(mod, N)
        return mod

    def normalize(self, elem):
        out = {}
        for wedge, poly in elem.items():
            clean = {}
            for alpha, c in poly.items():
                if any(N is not None and a >= N for a, N in zip(alpha, self.trunc)):
                    continue
                c %= self._coeff_modulus(wedge, alpha)
                if c:
                    clean[alpha] = c
            if clean:
                out[wedge] = clean
        return out

    def degree_of(self, elem):
        qs = {len(w) for w in elem}
        if len(qs) > 1:
            raise ValueError("mixed degrees")
        return qs.pop() if qs else None

    # construction ------------------------------------------------------------
    def monomial(self, alpha, c=1):
        return self.normalize({(): {tuple(alpha): c}})

    def from_poly(self, poly):
        return self.normalize({(): dict(poly)})

    def gen_differential(self, i):
        return {(i,): {(0,) * self.r: 1}}

    # arithmetic --------------------------------------------------------------
    def add(self, a, b):
        out = {w: dict(p) for w, p in a.items()}
        for w, poly in b.items():
            tgt = out.setdefault(w, {})
            for alpha, c in poly.items():
                tgt[alpha] = tgt.get(alpha, 0) + c
        return self.normalize(out)

    def scale(self, a, k):
        return self.normalize({w: {al: c * k for al, c in p.items()} for w, p in a.items()})

    def sub(self, a, b):
        return self.add(a, self.scale(b, -1))

    def wedge(self, a, b):
        out = {}
        for w1, p1 in a.items():
            for w2, p2 in b.items():
                if set(w1) & set(w2):
                    continue
                merged = list(w1 + w2)
                sign = 1
                for i in range(len(merged)):
                    for j in range(len(merged) - 1 - i):
                        if merged[j] > merged[j + 1]:
                            merged[j], merged[j + 1] = merged[j + 1], merged[j]
                            sign = -sign
                tgt = out.setdefault(tuple(merged), {})
                for a1, c1 in p1.items():
                    for a2, c2 in p2.items():
                        al = tuple(x + y for x, y in zip(a1, a2))
                        tgt[al] = tgt.get(al, 0) + sign * c1 * c2
        return self.normalize(out)

    mul = wedge

    def d(self, a):
        """``d(f dx_I) = sum_i df/dx_i dx_i ^ dx_I``."""
        out = {}
        for w, poly in a.items():
            for alpha, c in poly.items():
                for i in range(self.r):
                    if alpha[i] == 0 or i in w:
                        continue
                    beta = list(alpha)
                    beta[i] -= 1
                    merged = [i] + list(w)
                    pos = sorted(merged)
                    sign = (-1) ** pos.index(i)
                    tgt = out.setdefault(tuple(pos), {})
                    tgt[tuple(beta)] = tgt.get(tuple(beta), 0) + sign * alpha[i] * c
        return self.normalize(out)

    def is_zero(self, a):
        return not self.normalize(a)

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    # sizes -------------------------------------------------------------------
    def basis(self, q, weight):
        """Monomial basis ``x^alpha dx_I`` of weight ``|alpha| + q`` with coefficient moduli."""
        out = []
        deg = weight - q
        if deg < 0:
            return out
        for wedge in combinations(range(self.r), q):
            for alpha in _compositions(deg, self.r):
                if any(N is not None and a >= N for a, N in zip(alpha, self.trunc)):
                    continue
                mod = self._coeff_modulus(wedge, alpha)
                if mod > 1:
                    out.append((wedge, alpha, mod))
        return out

    def dimension(self, q, weight):
        """F_p-dimension (for prime ``m``) of the weight piece of ``Omega^q``."""
        return len(self.basis(q, weight))

    def format(self, a):
        if not a:
            return "0"
        terms = []
        for w in sorted(a):
            for alpha in sorted(a[w]):
                c = a[w][alpha]
                mono = "*".join(f"{self.gens[i]}^{e}" if e > 1 else self.gens[i]
                                for i, e in enumerate(alpha) if e)
                diff = "^".join(f"d{self.gens[i]}" for i in w)
                body = "*".join(x for x in (mono, diff) if x) or "1"
                terms.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(terms)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def kahler_differentials(m: int, gens=("x",), trunc=None) -> KahlerModule:
    return KahlerModule(m, gens, trunc)


__all__ = ["KahlerModule", "kahler_differentials"]
