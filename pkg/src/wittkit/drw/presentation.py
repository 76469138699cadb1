"""Bounded presentations of ``W_n Omega^q_A`` by weight blocks.

Generators are canonical words (see :mod:`wittkit.drw.words`).  Every
relation used here is an identity in the de Rham-Witt complex, and all of
them are homogeneous for the weight grading, so the presentation splits
into blocks indexed by ``(q, weight)``, each a Howell basis over ``Z/p^n``.

Relations at depth 1:

* torsion: ``p^(n-j) w = 0`` when ``w`` contains a ``V^j`` factor;
* truncation: ``p^i w = 0`` when ``w`` has a factor ``V^j[x^k]`` with
  ``p^i k >= N``, since ``V^{j+i}[x^{p^i k}] = p^i V^j[x^k]``;
* Leibniz ``C (d(xy) - dx y - x dy) = 0`` for heads ``x, y`` and words ``C``;
* projection ``V(x F(y)) - V(x) y = 0`` for words ``x`` at level ``n-1``
  and ``y`` at level ``n``.

The remaining axioms (``FV = p``, ``FdV = d``, ``F d[a] = [a^(p-1)] d[a]``,
``d^2 = 0``, graded commutativity, ``lambda`` a ring map) hold by
construction of the expression operators.

Depth ``r > 1`` adds the images under ``d``, ``V``, ``F`` and ``R`` of the
depth ``r-1`` blocks of the neighbouring degrees and levels, and products
of lower-degree depth ``r-1`` relations with words.

Equality is one-sided.  Reduction to zero proves equality.  A nonzero
residual proves nothing by itself.  Inequality needs a separating map:
``R^a F^b`` down to level 1 followed by ``W_1 Omega = Omega``, or the
Witt-vector reading of degree 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..exact.matrix import SparseHowellBasis, quotient_order_log
from .kahler import KahlerModule
from .words import (ONE, DRWExpression, MonomialAlgebra, expression_to_witt, format_word,
                    word_max_j, word_weight)

EQUAL = "EQUAL"
DISTINCT = "DISTINCT"
INCONCLUSIVE = "INCONCLUSIVE"


class OutsideGenerators(ValueError):
    """A word does not belong to the presentation's generator set."""


# --- enumeration ---------------------------------------------------------------------

def _scale(p, n):
    return p ** (n - 1)


def _factors(A: MonomialAlgebra, n: int, limit: int):
    """Canonical non-unit factors with scaled weight ``<= limit``."""
    p = A.p
    out = []
    for j in range(n):
        unit = p ** (n - 1 - j)
        k = 1
        while k * unit <= limit:
            if A.allows(k) and (j == 0 or k % p):
                out.append(((j, k), k * unit))
            k += 1
    out.sort(key=lambda f: (f[1], f[0]))
    return out


def words_of(A: MonomialAlgebra, n: int, q: int, weight: Fraction):
    """All canonical words of degree ``q`` and the given weight at level ``n``."""
    return list(_words_of(A, n, q, Fraction(weight)))


@lru_cache(maxsize=4096)
def _words_of(A, n, q, weight):
    if n <= 0 or weight < 0:
        return ()
    W = weight * _scale(A.p, n)
    if W.denominator != 1:
        return ()
    W = int(W)
    facs = _factors(A, n, W)
    tails_by_weight = {}

    def tails(start, count, remaining, acc):
        if count == 0:
            tails_by_weight.setdefault(remaining, []).append(tuple(acc))
            return
        for i in range(start, len(facs)):
            f, w = facs[i]
            if w > remaining:
                break
            acc.append(f)
            tails(i + 1, count - 1, remaining - w, acc)
            acc.pop()

    tails(0, q, W, [])
    out = []
    heads = [(ONE, 0)] + facs
    for h, hw in heads:
        for t in tails_by_weight.get(hw, ()):
            out.append((h, tuple(sorted(t))))
    return tuple(sorted(out))


def weights_up_to(A: MonomialAlgebra, n: int, bound) -> list:
    s = _scale(A.p, n)
    return [Fraction(i, s) for i in range(int(Fraction(bound) * s) + 1)]


def heads_up_to(A, n, bound):
    return [w for wt in weights_up_to(A, n, bound) if wt > 0 for w in words_of(A, n, 0, wt)]


# --- blocks --------------------------------------------------------------------------

@dataclass
class Block:
    """Generators and relation span of one ``(level, degree, weight)`` piece."""

    n: int
    q: int
    weight: Fraction
    depth: int
    gens: list
    basis: SparseHowellBasis
    relations_tried: int = 0
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.gens)}

    def vector(self, e: DRWExpression) -> dict:
        out = {}
        for w, c in e.terms.items():
            i = self.index.get(w)
            if i is None:
                raise OutsideGenerators(f"word {format_word(e.A, w)} is outside the generator set")
            out[i] = c
        return out

    def expression(self, A, vec) -> DRWExpression:
        return DRWExpression(A, self.n, self.q, {self.gens[i]: c for i, c in vec.items()})

    def rows(self):
        return [row for _, (_, row) in sorted(self.basis.pivots.items())]

    @property
    def rank(self):
        return len(self.basis.pivots)

    @property
    def quotient_log(self):
        """log_p of the order of this block of the quotient."""
        return quotient_order_log(self.basis, range(len(self.gens)))

    def summary(self):
        return {"q": self.q, "weight": str(self.weight), "depth": self.depth,
                "generators": len(self.gens), "relations": self.relations_tried,
                "pivots": self.rank, "quotient_log_p": self.quotient_log}


class PresentationEngine:
    """Builds and caches blocks for one algebra and all levels."""

    def __init__(self, A: MonomialAlgebra):
        self.A = A
        self._blocks = {}

    def block(self, n: int, q: int, weight, depth: int) -> Block:
        key = (n, q, Fraction(weight), depth)
        blk = self._blocks.get(key)
        if blk is None:
            blk = self._build(*key)
            self._blocks[key] = blk
        return blk

    # relation sources --------------------------------------------------------
    def _templates(self, n, q, w):
        A, p = self.A, self.A.p
        if q >= 1:
            by_weight = {}
            for h in heads_up_to(A, n, w):
                by_weight.setdefault(word_weight(A, h), []).append(h)
            for wc in weights_up_to(A, n, w):
                contexts = words_of(A, n, q - 1, wc)
                if not contexts:
                    continue
                for wx, xs in sorted(by_weight.items()):
                    wy = w - wc - wx
                    if wy < wx:
                        break
                    for x in xs:
                        for y in by_weight.get(wy, ()):
                            if wx == wy and y < x:
                                continue
                            leib = _leibniz(A, n, x, y)
                            if leib is None:
                                continue
                            for C in contexts:
                                yield DRWExpression(A, n, q - 1, {C: 1}) * leib
        if n >= 2:
            s = _scale(p, n)
            for i in range(int(w * s) + 1):
                wy = Fraction(i, s)
                wx = p * (w - wy)
                for qx in range(q + 1):
                    xs = words_of(A, n - 1, qx, wx)
                    ys = [y for y in words_of(A, n, q - qx, wy) if y != (ONE, ())]
                    if not xs or not ys:
                        continue
                    for y in ys:
                        ey = DRWExpression(A, n, q - qx, {y: 1})
                        Fy = ey.F()
                        for x in xs:
                            ex = DRWExpression(A, n - 1, qx, {x: 1})
                            yield (ex * Fy).V() - ex.V() * ey

    def _images(self, n, q, w, depth):
        A, p = self.A, self.A.p
        prev = depth - 1
        if q >= 1:
            src = self.block(n, q - 1, w, prev)
            for row in src.rows():
                yield src.expression(A, row).d()
        if n >= 2:
            src = self.block(n - 1, q, p * w, prev)
            for row in src.rows():
                yield src.expression(A, row).V()
        src = self.block(n + 1, q, w / p, prev)
        for row in src.rows():
            yield src.expression(A, row).F()
        src = self.block(n + 1, q, w, prev)
        for row in src.rows():
            yield src.expression(A, row).R()
        for q1 in range(q):
            for w1 in weights_up_to(A, n, w):
                contexts = words_of(A, n, q - q1, w - w1)
                if not contexts:
                    continue
                src = self.block(n, q1, w1, prev)
                for row in src.rows():
                    e = src.expression(A, row)
                    for C in contexts:
                        yield e * DRWExpression(A, n, q - q1, {C: 1})

    def _build(self, n, q, w, depth):
        A, p = self.A, self.A.p
        gens = words_of(A, n, q, w)
        blk = Block(n, q, w, depth, list(gens), SparseHowellBasis(p, max(n, 1)))
        if n <= 0 or not gens:
            return blk
        for i, g in enumerate(gens):
            j = word_max_j(g)
            if j:
                blk.basis.insert({i: p ** (n - j)})
            if A.trunc is not None:
                e = _truncation_torsion(A, n, g)
                if e is not None:
                    blk.basis.insert({i: p ** e})
        sources = [self._templates(n, q, w)]
        if depth >= 2:
            sources.append(self._images(n, q, w, depth))
        for src in sources:
            for rel in src:
                blk.relations_tried += 1
                if rel.is_zero():
                    continue
                blk.basis.insert(blk.vector(rel))
        return blk


@lru_cache(maxsize=100000)
def _leibniz(A, n, x, y):
    """``d(xy) - dx y - x dy`` for two heads, or ``None`` when it vanishes."""
    ex = DRWExpression(A, n, 0, {x: 1})
    ey = DRWExpression(A, n, 0, {y: 1})
    leib = (ex * ey).d() - ex.d() * ey - ex * ey.d()
    return None if leib.is_zero() else leib


def _truncation_torsion(A, n, word):
    """Least ``e`` with ``p^e word = 0`` forced by ``x^N = 0``, if below the level bound.

    ``p^i V^j[x^k] = V^(j+i)[x^(p^i k)]`` vanishes once ``p^i k >= N``.
    """
    head, tail = word
    best = None
    for j, k in ((head,) if head != ONE else ()) + tail:
        i = 1
        while A.allows(A.p ** i * k):
            i += 1
        if j + i < n and (best is None or i < best):
            best = i
    return best


# --- the presentation ----------------------------------------------------------------

@dataclass
class Verdict:
    status: str
    separator: str | None = None
    residual: dict | None = None
    detail: str = ""

    def to_json(self):
        return {"status": self.status, "separator": self.separator,
                "residual": self.residual, "detail": self.detail}


class BoundedPresentation:
    """``W_n Omega^q_A`` cut off at weight ``dx`` with relation depth ``dr``.

    Blocks of other weights or degrees are built on demand when an
    expression needs them; :attr:`grown` records those.
    """

    def __init__(self, A: MonomialAlgebra, n: int, q: int, dx, dr: int, engine=None,
                 eager=True):
        if A.p == 2:
            raise ValueError("p must be odd")
        if n < 1:
            raise ValueError("level must be at least 1")
        if dr < 1:
            raise ValueError("relation depth must be at least 1")
        self.A, self.n, self.q, self.dx, self.dr = A, n, q, Fraction(dx), dr
        self.engine = engine or PresentationEngine(A)
        self.grown = set()
        if eager:
            for wt in weights_up_to(A, n, self.dx):
                self.block(q, wt)
            if q == 0 and not words_of(A, n, 0, Fraction(0)):
                raise ValueError("depth too small: the unit word is missing")

    @property
    def p(self):
        return self.A.p

    def block(self, q, weight) -> Block:
        weight = Fraction(weight)
        if weight > self.dx or q != self.q:
            self.grown.add((q, weight))
        return self.engine.block(self.n, q, weight, self.dr)

    def blocks(self):
        return [self.block(self.q, wt) for wt in weights_up_to(self.A, self.n, self.dx)]

    def ranks_per_depth(self):
        """Quotient sizes (log_p) per weight for every depth up to ``dr``."""
        out = []
        for wt in weights_up_to(self.A, self.n, self.dx):
            row = {"weight": str(wt), "generators": len(words_of(self.A, self.n, self.q, wt))}
            for r in range(1, self.dr + 1):
                row[f"depth{r}"] = self.engine.block(self.n, self.q, wt, r).quotient_log
            out.append(row)
        return out

    # reduction -----------------------------------------------------------------
    def _check_expr(self, e: DRWExpression):
        if e.A != self.A or e.n != self.n:
            raise ValueError(f"expression lives at level {e.n} of {e.A.tag}, "
                             f"presentation is level {self.n} of {self.A.tag}")

    def reduce(self, e: DRWExpression) -> dict:
        """Residual vectors per weight; empty means ``e`` is zero."""
        self._check_expr(e)
        by_weight = {}
        for w, c in e.terms.items():
            by_weight.setdefault(word_weight(self.A, w), {})[w] = c
        out = {}
        for wt, terms in sorted(by_weight.items()):
            blk = self.block(e.q, wt)
            res = blk.basis.reduce(blk.vector(DRWExpression(self.A, self.n, e.q, terms)))
            if res:
                out[wt] = res
        return out

    def residual_expression(self, e: DRWExpression) -> DRWExpression:
        acc = DRWExpression(self.A, self.n, e.q)
        for wt, vec in self.reduce(e).items():
            acc = acc + self.block(e.q, wt).expression(self.A, vec)
        return acc

    def is_zero(self, e: DRWExpression) -> bool:
        return not self.reduce(e)

    def equal_at_depth(self, e1: DRWExpression, e2: DRWExpression) -> Verdict:
        """EQUAL by reduction, DISTINCT through a separating map, else INCONCLUSIVE."""
        if e1.q != e2.q and not (e1.is_zero() or e2.is_zero()):
            return Verdict(DISTINCT, "degree", None, f"degrees {e1.q} and {e2.q}")
        diff = e1 - e2
        residual = self.residual_expression(diff)
        if residual.is_zero():
            return Verdict(EQUAL, None, None, "difference reduces to zero")
        sep = separate(diff)
        res_str = str(residual)
        if sep is not None:
            return Verdict(DISTINCT, sep[0], {"residual": res_str}, sep[1])
        return Verdict(INCONCLUSIVE, None, {"residual": res_str},
                       "difference does not reduce at this depth")

    # serialization ---------------------------------------------------------------
    def to_json(self):
        blocks = []
        for (q, wt), blk in sorted(self._all_blocks().items()):
            blocks.append({
                "q": q, "weight": str(wt),
                "generators": [[list(g[0]), [list(f) for f in g[1]]] for g in blk.gens],
                "labels": [format_word(self.A, g) for g in blk.gens],
                "pivots": [[c, a, sorted(row.items())] for c, (a, row) in sorted(blk.basis.pivots.items())],
                "relations_tried": blk.relations_tried,
            })
        return {"algebra": self.A.tag, "p": self.p, "n": self.n, "q": self.q,
                "dx": str(self.dx), "dr": self.dr, "blocks": blocks,
                "ranks_per_depth": self.ranks_per_depth()}

    def _all_blocks(self):
        out = {}
        for (n, q, wt, r), blk in self.engine._blocks.items():
            if n == self.n and r == self.dr:
                out[(q, wt)] = blk
        return out

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data):
        A = MonomialAlgebra.parse(data["algebra"])
        pres = cls(A, int(data["n"]), int(data["q"]), Fraction(data["dx"]), int(data["dr"]),
                   eager=False)
        for b in data["blocks"]:
            gens = [(tuple(g[0]), tuple(tuple(f) for f in g[1])) for g in b["generators"]]
            wt = Fraction(b["weight"])
            expected = words_of(A, pres.n, int(b["q"]), wt)
            if list(expected) != gens:
                raise ValueError(f"stored generators for weight {wt} do not match this build")
            basis = SparseHowellBasis(A.p, pres.n)
            for c, a, row in b["pivots"]:
                basis.pivots[int(c)] = (int(a), {int(k): int(v) for k, v in row})
            blk = Block(pres.n, int(b["q"]), wt, pres.dr, gens, basis, int(b["relations_tried"]))
            pres.engine._blocks[(pres.n, int(b["q"]), wt, pres.dr)] = blk
        return pres


def build_presentation(A, p=None, n=2, q=0, dx=3, dr=1) -> BoundedPresentation:
    """Presentation of ``W_n Omega^q_A`` up to weight ``dx`` with relation depth ``dr``."""
    if isinstance(A, str):
        A = MonomialAlgebra.parse(A)
    if p is not None and p != A.p:
        raise ValueError(f"p={p} does not match {A.tag}")
    return BoundedPresentation(A, n, q, dx, dr)


# --- separating maps ---------------------------------------------------------------------

def kahler_module_of(A: MonomialAlgebra) -> KahlerModule:
    trunc = {A.var: A.trunc} if A.var and A.trunc else ({"x": 1} if A.var is None else None)
    return KahlerModule(A.p, (A.var or "x",), trunc)


def to_kahler(e: DRWExpression):
    """A level-1 expression as an element of ``Omega^q_A``."""
    if e.n != 1:
        raise ValueError("only level-1 expressions map to Kahler differentials")
    K = kahler_module_of(e.A)
    acc = {}
    for (head, tail), c in e.terms.items():
        term = K.monomial((head[1],), c)
        for _, k in tail:
            term = K.wedge(term, K.d(K.monomial((k,))))
        acc = K.add(acc, term)
    return acc


def level1_restriction(e: DRWExpression):
    """``R^(n-1)`` into ``W_1 Omega^q = Omega^q``; V-words die on the way."""
    return to_kahler(e.iterate("R", e.n - 1))


def separate(e: DRWExpression):
    """A map to a faithful model under which ``e`` is nonzero, if one is found."""
    if e.n >= 1:
        K = kahler_module_of(e.A)
        for a in range(e.n):
            img = e.iterate("F", e.n - 1 - a).iterate("R", a)
            kimg = to_kahler(img)
            if kimg:
                label = "level1_restriction" if a == e.n - 1 else f"R^{a} F^{e.n - 1 - a}"
                return label, f"image {K.format(kimg)} in Omega^{e.q}"
    if e.q == 0:
        x = expression_to_witt(e)
        if any(not x.ring.is_zero(c) for c in x.components):
            return "witt_vector", f"Witt vector {x.to_json()['components']}"
    return None


__all__ = [
    "EQUAL", "DISTINCT", "INCONCLUSIVE", "OutsideGenerators", "words_of", "weights_up_to",
    "Block", "PresentationEngine", "Verdict", "BoundedPresentation", "build_presentation",
    "kahler_module_of", "to_kahler", "level1_restriction", "separate",
]
