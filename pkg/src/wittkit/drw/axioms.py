"""Witt-complex axioms evaluated on concrete instances.

An instance supplies, for levels ``1..N``, graded elements together with
``+``, ``*``, ``d``, ``F``, ``V``, ``R`` and ``lambda``.  The checker
evaluates

* ``F``, ``R`` graded ring maps, ``V`` additive, ``d`` a differential;
* ``V(x F(y)) = V(x) y``, ``F d V = d``, ``F V = p``,
  ``F d lambda[a] = lambda[a^(p-1)] d lambda[a]``;
* ``d^2 = 0``, the graded Leibniz rule and graded commutativity;
* ``lambda`` additive and multiplicative, and compatible with ``R`` and ``F``;
* ``R`` commuting with ``F``, ``V`` and ``d``

on every sample and itemizes the failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from ..exact.rings import GF
from ..witt.ptypical import PTypicalWitt
from .kahler import KahlerModule
from .presentation import EQUAL, PresentationEngine, BoundedPresentation
from .words import DRWExpression, MonomialAlgebra, teichmuller_lift


@dataclass
class WittComplexInstance:
    """Maps of a candidate Witt complex over a finite sample domain.

    ``F(n, x)`` takes ``x`` at level ``n + 1`` to level ``n``; ``V(n, x)``
    takes level ``n`` to ``n + 1``; ``R(n, x)`` takes level ``n + 1`` to ``n``.
    ``lam(n, w)`` sends a p-typical Witt vector of length ``n`` to degree 0.
    ``teich(n, a)`` is the Witt vector ``[a]`` of length ``n``.
    """

    name: str
    p: int
    levels: int
    samples: Callable  # (n, q) -> list
    add: Callable  # (n, x, y)
    mul: Callable  # (n, x, y)
    scale: Callable  # (n, x, k)
    eq: Callable  # (n, x, y) -> bool
    degree: Callable  # (x) -> int
    d: Callable
    F: Callable
    V: Callable
    R: Callable
    lam: Callable
    teich: Callable
    witt_samples: Callable  # (n) -> list of PTypicalWitt
    ring_samples: Callable  # () -> list of elements a of A
    ring_power: Callable  # (a, k) -> a^k
    max_degree: int = 2
    notes: dict = field(default_factory=dict)


@dataclass
class AxiomFailure:
    axiom: str
    level: int
    inputs: str

    def to_json(self):
        return {"axiom": self.axiom, "level": self.level, "inputs": self.inputs}


@dataclass
class AxiomReport:
    instance: str
    counts: dict
    failures: list

    @property
    def passed(self):
        return not self.failures

    @property
    def cases(self):
        return sum(self.counts.values())

    def to_json(self):
        return {"instance": self.instance, "cases": self.cases, "counts": dict(sorted(self.counts.items())),
                "failures": [f.to_json() for f in self.failures], "pass": self.passed}


def axioms_check(inst: WittComplexInstance, max_failures: int = 50) -> AxiomReport:
    counts, failures = {}, []
    p = inst.p

    def check(name, level, ok, *inputs):
        counts[name] = counts.get(name, 0) + 1
        if not ok and len(failures) < max_failures:
            failures.append(AxiomFailure(name, level, " ; ".join(str(x) for x in inputs)))

    degrees = range(inst.max_degree + 1)
    for n in range(1, inst.levels + 1):
        samples = {q: list(inst.samples(n, q)) for q in degrees}
        if not any(samples.values()):
            raise ValueError(f"empty sample domain at level {n}")
        flat = [x for q in degrees for x in samples[q]]
        # CDGA laws
        for x in flat:
            dx = inst.d(n, x)
            check("d^2 = 0", n, inst.eq(n, inst.d(n, dx), inst.scale(n, inst.d(n, dx), 0)), x)
        for x, y in product(flat, repeat=2):
            qx, qy = inst.degree(x), inst.degree(y)
            if qx + qy > inst.max_degree:
                continue
            xy, yx = inst.mul(n, x, y), inst.mul(n, y, x)
            check("graded commutativity", n, inst.eq(n, xy, inst.scale(n, yx, (-1) ** (qx * qy))), x, y)
            lhs = inst.d(n, xy)
            rhs = inst.add(n, inst.mul(n, inst.d(n, x), y), inst.scale(n, inst.mul(n, x, inst.d(n, y)), (-1) ** qx))
            if qx + qy + 1 <= inst.max_degree:
                check("Leibniz", n, inst.eq(n, lhs, rhs), x, y)
        # lambda as a ring map
        ws = list(inst.witt_samples(n))
        for a, b in product(ws, repeat=2):
            check("lambda additive", n, inst.eq(n, inst.lam(n, a + b), inst.add(n, inst.lam(n, a), inst.lam(n, b))), a, b)
            check("lambda multiplicative", n, inst.eq(n, inst.lam(n, a * b), inst.mul(n, inst.lam(n, a), inst.lam(n, b))), a, b)
        if n == inst.levels:
            continue
        up = {q: list(inst.samples(n + 1, q)) for q in degrees}
        up_flat = [x for q in degrees for x in up[q]]
        for x in flat:
            Vx = inst.V(n, x)
            check("FV = p", n, inst.eq(n, inst.F(n, Vx), inst.scale(n, x, p)), x)
            check("FdV = d", n, inst.eq(n, inst.F(n, inst.d(n + 1, Vx)), inst.d(n, x)), x)
            for y in up_flat:
                if inst.degree(x) + inst.degree(y) > inst.max_degree:
                    continue
                lhs = inst.V(n, inst.mul(n, x, inst.F(n, y)))
                rhs = inst.mul(n + 1, Vx, y)
                check("V(x F(y)) = V(x) y", n + 1, inst.eq(n + 1, lhs, rhs), x, y)
        for y, z in product(up_flat, repeat=2):
            if inst.degree(y) + inst.degree(z) > inst.max_degree:
                continue
            yz = inst.mul(n + 1, y, z)
            check("F multiplicative", n, inst.eq(n, inst.F(n, yz), inst.mul(n, inst.F(n, y), inst.F(n, z))), y, z)
            check("R multiplicative", n, inst.eq(n, inst.R(n, yz), inst.mul(n, inst.R(n, y), inst.R(n, z))), y, z)
            s = inst.add(n + 1, y, z) if inst.degree(y) == inst.degree(z) else None
            if s is not None:
                check("F additive", n, inst.eq(n, inst.F(n, s), inst.add(n, inst.F(n, y), inst.F(n, z))), y, z)
        for y in up_flat:
            check("Rd = dR", n, inst.eq(n, inst.R(n, inst.d(n + 1, y)), inst.d(n, inst.R(n, y))), y)
        if n + 2 <= inst.levels:
            for q in degrees:
                for z in inst.samples(n + 2, q):
                    check("RF = FR", n, inst.eq(n, inst.R(n, inst.F(n + 1, z)), inst.F(n, inst.R(n + 1, z))), z)
        if n >= 2:
            for x in flat:
                check("RV = VR", n, inst.eq(n, inst.R(n, inst.V(n, x)), inst.V(n - 1, inst.R(n - 1, x))), x)
        for a in inst.ring_samples():
            la = inst.lam(n + 1, inst.teich(n + 1, a))
            lhs = inst.F(n, inst.d(n + 1, la))
            rhs = inst.mul(n, inst.lam(n, inst.teich(n, inst.ring_power(a, p - 1))), inst.d(n, inst.lam(n, inst.teich(n, a))))
            check("F d lambda[a] = lambda[a^(p-1)] d lambda[a]", n, inst.eq(n, lhs, rhs), a)
        for w in inst.witt_samples(n + 1):
            check("R lambda = lambda R", n, inst.eq(n, inst.R(n, inst.lam(n + 1, w)), inst.lam(n, w.truncate(n))), w)
    return AxiomReport(inst.name, counts, failures)


# --- instances -------------------------------------------------------------------------------

def _witt_over_fp(p, n):
    F = GF(p)
    return [PTypicalWitt(F, p, list(c)) for c in product(range(p), repeat=n)]


def _witt_value(w: PTypicalWitt, p, n):
    """The element of ``Z/p^n`` represented by ``w`` over ``F_p``."""
    return sum(p ** i * teichmuller_lift(int(c), p, n - i) for i, c in enumerate(w.components[:n])) % p ** n


def degenerate_instance(p: int, levels: int = 3, v_factor=None) -> WittComplexInstance:
    """``E_n^0 = Z/p^n``, ``E^q = 0`` for ``q >= 1``, ``V = p``, ``F = R`` = reduction, ``d = 0``.

    ``v_factor`` replaces the multiplier of ``V`` (a mutated instance).
    """
    vf = p if v_factor is None else v_factor
    zero = lambda q: (q, 0)  # noqa: E731

    def norm(n, x):
        q, v = x
        return (q, v % p ** n if q == 0 else 0)

    def add(n, x, y):
        return norm(n, (x[0], x[1] + y[1]))

    def mul(n, x, y):
        return norm(n, (x[0] + y[0], x[1] * y[1]))

    return WittComplexInstance(
        name=f"degenerate F{p}" + ("" if v_factor is None else f" (V = {vf})"),
        p=p, levels=levels,
        samples=lambda n, q: [(0, v) for v in range(p ** n)] if q == 0 else [zero(q)],
        add=add, mul=mul,
        scale=lambda n, x, k: norm(n, (x[0], x[1] * k)),
        eq=lambda n, x, y: norm(n, x) == norm(n, y),
        degree=lambda x: x[0],
        d=lambda n, x: zero(x[0] + 1),
        F=lambda n, x: norm(n, x),
        V=lambda n, x: norm(n + 1, (x[0], x[1] * vf)),
        R=lambda n, x: norm(n, x),
        lam=lambda n, w: (0, _witt_value(w, p, n)),
        teich=lambda n, a: PTypicalWitt.teichmuller(GF(p), p, a, n),
        witt_samples=lambda n: _witt_over_fp(p, n),
        ring_samples=lambda: list(range(p)),
        ring_power=lambda a, k: pow(a, k, p),
        max_degree=1,
        notes={"E^q": "zero for q >= 1"},
    )


def mutated_instance(p: int, levels: int = 3) -> WittComplexInstance:
    """The degenerate instance with ``V`` multiplying by ``p + 1``; ``FV = p`` must fail."""
    return degenerate_instance(p, levels, v_factor=p + 1)


def de_rham_instance(p: int, gens=("x", "y"), degree_bound: int = 2) -> WittComplexInstance:
    """Level 1 only: ``E_1^q = Omega^q`` of ``F_p[gens]``; F and V are vacuous."""
    K = KahlerModule(p, gens)
    r = len(gens)
    monos = [a for a in product(range(degree_bound + 1), repeat=r) if sum(a) <= degree_bound]

    def samples(n, q):
        if q == 0:
            return [(0, K.monomial(a, 1 + i % (p - 1))) for i, a in enumerate(monos)]
        if q == 1:
            return [(1, K.wedge(K.monomial(a), K.d(K.monomial(b)))) for a in monos[:4] for b in monos[1:4]]
        return []

    def wrap(q, e):
        return (q, e)

    def lam(n, w):
        # W_1(A) = A
        c = w.components[0]
        return (0, K.from_poly({tuple(e): int(v) for e, v in c.terms.items()}))

    R = _poly_ring_for(p, gens)
    return WittComplexInstance(
        name=f"de Rham level 1 over F{p}[{','.join(gens)}]", p=p, levels=1,
        samples=samples,
        add=lambda n, x, y: wrap(x[0] if x[1] else y[0], K.add(x[1], y[1])),
        mul=lambda n, x, y: wrap(x[0] + y[0], K.wedge(x[1], y[1])),
        scale=lambda n, x, k: wrap(x[0], K.scale(x[1], k)),
        eq=lambda n, x, y: K.eq(x[1], y[1]),
        degree=lambda x: x[0],
        d=lambda n, x: wrap(x[0] + 1, K.d(x[1])),
        F=lambda n, x: x, V=lambda n, x: x, R=lambda n, x: x,
        lam=lam,
        teich=lambda n, a: PTypicalWitt.teichmuller(R, p, a, n),
        witt_samples=lambda n: [PTypicalWitt(R, p, [R.gen(g) + R.from_int(i)]) for i, g in enumerate(gens)],
        ring_samples=lambda: [R.gen(g) for g in gens],
        ring_power=lambda a, k: a ** k,
        max_degree=min(2, r),
    )


def _poly_ring_for(p, gens):
    from ..exact.poly import PolynomialRing

    return PolynomialRing(GF(p), tuple(gens))


def presentation_instance(A: MonomialAlgebra, levels: int = 3, dr: int = 1, max_weight=2,
                          seed: int = 0, per_degree: int = 4) -> WittComplexInstance:
    """Expressions at levels ``1..levels``; equality is reduction to zero.

    Samples are random single words of weight at most ``max_weight``.
    """
    from .presentation import words_of, weights_up_to

    engine = PresentationEngine(A)
    press = {}

    def pres(n):
        if n not in press:
            press[n] = BoundedPresentation(A, n, 0, 0, dr, engine=engine, eager=False)
        return press[n]

    rng = random.Random(seed)
    cache = {}

    def samples(n, q):
        key = (n, q)
        if key not in cache:
            pool = [w for wt in weights_up_to(A, n, max_weight) for w in words_of(A, n, q, wt)]
            pool = [w for w in pool if w[0][1] <= 2 * max_weight]
            picks = sorted(rng.sample(pool, min(per_degree, len(pool)))) if pool else []
            cache[key] = [DRWExpression(A, n, q, {w: 1 + rng.randrange(A.p - 1)}) for w in picks]
        return cache[key]

    def eq(n, x, y):
        if x.q != y.q and not (x.is_zero() or y.is_zero()):
            return False
        return pres(n).equal_at_depth(x, y).status == EQUAL

    R = A.poly_ring()

    def witt_samples(n):
        out = []
        for i in range(3):
            comps = [R.convert(rng.randrange(A.p)) + (R.gen(R.gens[0]) ** (i + 1) if A.var else R.zero)]
            comps += [R.convert(rng.randrange(A.p)) for _ in range(n - 1)]
            out.append(PTypicalWitt(R, A.p, comps))
        return out

    return WittComplexInstance(
        name=f"bounded presentation of W_n Omega over {A.tag}", p=A.p, levels=levels,
        samples=samples,
        add=lambda n, x, y: x + y,
        mul=lambda n, x, y: x * y,
        scale=lambda n, x, k: x.scale(k),
        eq=eq,
        degree=lambda x: x.q,
        d=lambda n, x: x.d(),
        F=lambda n, x: x.F(),
        V=lambda n, x: x.V(),
        R=lambda n, x: x.R(),
        lam=lambda n, w: DRWExpression.from_witt(A, w.truncate(n)),
        teich=lambda n, a: PTypicalWitt.teichmuller(R, A.p, a, n),
        witt_samples=witt_samples,
        ring_samples=lambda: [R.gen(R.gens[0]), R.gen(R.gens[0]) + R.one] if A.var else [R.one, R.from_int(2)],
        ring_power=lambda a, k: a ** k,
        max_degree=2,
    )


__all__ = [
    "WittComplexInstance", "AxiomFailure", "AxiomReport", "axioms_check", "degenerate_instance",
    "mutated_instance", "de_rham_instance", "presentation_instance",
]
