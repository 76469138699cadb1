"""Named identities checked against bounded presentations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from ..witt.ptypical import PTypicalWitt
from .presentation import (DISTINCT, EQUAL, INCONCLUSIVE, BoundedPresentation,
                           PresentationEngine, kahler_module_of, weights_up_to)
from .words import DRWExpression, MonomialAlgebra, expression_to_witt


# --- units of A ----------------------------------------------------------------------------

def unit_inverse(A: MonomialAlgebra, f: dict) -> dict:
    """Inverse of a unit of A as ``{exponent: coefficient}``."""
    p = A.p
    c0 = f.get(0, 0) % p
    if not c0:
        raise ValueError("not a unit: zero constant term")
    if any(k > 0 and c % p for k, c in f.items()):
        if A.trunc is None:
            raise ValueError("not a unit: nonconstant polynomial over a polynomial ring")
        N = A.trunc
        inv0 = pow(c0, -1, p)
        g = {0: inv0}
        for k in range(1, N):
            s = sum(f.get(i, 0) * g.get(k - i, 0) for i in range(1, k + 1))
            g[k] = (-s * inv0) % p
        return A.reduce_poly(g)
    return {0: pow(c0, -1, p)}


def _poly_mul(A, f, g):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return A.reduce_poly(out)


def eta_evaluate(A: MonomialAlgebra, points, n: int) -> DRWExpression:
    """``[a_0] dlog[a_1] ... dlog[a_q]`` as ``[a_0 (a_1...a_q)^-1] d[a_1] ... d[a_q]``."""
    points = [A.reduce_poly(dict(a)) for a in points]
    if not points:
        raise ValueError("need at least a_0")
    denom = {0: 1}
    for a in points[1:]:
        unit_inverse(A, a)
        denom = _poly_mul(A, denom, a)
    unit_inverse(A, points[0])
    head = _poly_mul(A, points[0], unit_inverse(A, denom))
    acc = DRWExpression.teichmuller(A, n, head)
    for a in points[1:]:
        acc = acc * DRWExpression.teichmuller(A, n, a).d()
    return acc


def dlog(A, a, n):
    """``[a]^{-1} d[a]`` computed with ``[a]^{-1} = [a^{-1}]``."""
    return DRWExpression.teichmuller(A, n, unit_inverse(A, a)) * DRWExpression.teichmuller(A, n, a).d()


# --- the F^e d[t^m] identity -----------------------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    lhs: str
    rhs: str
    status: str
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "status": self.status, "detail": self.detail}


def fd_power_reduce(p: int, m: int, e: int, n: int = 2, dr: int = 1, engine=None) -> IdentityResult:
    """Check ``F^e(d[t^m]) = m [t^(m p^e - 1)] d[t]`` in ``W_n Omega^1_{F_p[t]}``.

    The left side starts at level ``n + e``.
    """
    if m % p == 0:
        raise ValueError(f"p={p} divides m={m}")
    if e < 0 or m < 1:
        raise ValueError("need m >= 1 and e >= 0")
    A = MonomialAlgebra(p, "t")
    weight = m * p ** e
    pres = BoundedPresentation(A, n, 1, 0, dr, engine=engine, eager=False)
    lhs = DRWExpression.teichmuller(A, n + e, {m: 1}).d().iterate("F", e)
    rhs = (DRWExpression.teichmuller(A, n, {m * p ** e - 1: 1})
           * DRWExpression.teichmuller(A, n, {1: 1}).d()).scale(m)
    v = pres.equal_at_depth(lhs, rhs)
    return IdentityResult(f"F^{e} d[t^{m}]", str(lhs), str(rhs), v.status,
                          f"weight {weight}, level {n}, depth {dr}: {v.detail}")


# --- lambda injectivity ----------------------------------------------------------------------

def lambda_images(p: int, n: int):
    """``lambda`` of every element of ``W_n(F_p)`` together with the vector."""
    A = MonomialAlgebra(p, None)
    R = A.poly_ring()
    out = []
    for comps in product(range(p), repeat=n):
        x = PTypicalWitt(R, p, [R.convert(c) for c in comps])
        out.append((comps, DRWExpression.from_witt(A, x)))
    return A, out


def lambda_injectivity(p: int, n: int, dr: int = 1):
    """Pairwise differences of the ``p^n`` images stay outside the relation span.

    Returns counts of pairs that are separated, that reduce to zero, and
    whether the Witt-vector reading recovers each input.
    """
    A, images = lambda_images(p, n)
    pres = BoundedPresentation(A, n, 0, 0, dr)
    outside = collapsed = 0
    for (_, a), (_, b) in combinations(images, 2):
        if pres.reduce(a - b):
            outside += 1
        else:
            collapsed += 1
    roundtrip = 0
    F = A.field
    for comps, e in images:
        w = expression_to_witt(e)
        got = tuple(int(c.constant_term()) if c.terms else 0 for c in w.components)
        roundtrip += got == tuple(c % p for c in comps)
    return {"p": p, "n": n, "images": len(images), "pairs": outside + collapsed,
            "outside_span": outside, "collapsed": collapsed, "roundtrip": roundtrip,
            "pass": collapsed == 0 and roundtrip == len(images), "field": F.tag}


# --- level one versus Kahler -----------------------------------------------------------------

def level1_dimensions(A: MonomialAlgebra, q: int, dx: int, dr: int = 1):
    """Per weight: presentation quotient dimension at level 1 and Kahler dimension."""
    pres = BoundedPresentation(A, 1, q, dx, dr)
    K = kahler_module_of(A)
    rows = []
    for wt in weights_up_to(A, 1, dx):
        blk = pres.block(q, wt)
        rows.append({"weight": int(wt), "presentation": blk.quotient_log,
                     "kahler": K.dimension(q, int(wt))})
    return rows


def koszul_check(A, n, f, g, pres: BoundedPresentation):
    """``d[f] d[g] + d[g] d[f]`` reduces to zero."""
    df = DRWExpression.teichmuller(A, n, f).d()
    dg = DRWExpression.teichmuller(A, n, g).d()
    return pres.equal_at_depth(df * dg + dg * df, DRWExpression.zero(A, n, 2)).status


__all__ = [
    "unit_inverse", "eta_evaluate", "dlog", "IdentityResult", "fd_power_reduce", "lambda_images",
    "lambda_injectivity", "level1_dimensions", "koszul_check", "EQUAL", "DISTINCT",
    "INCONCLUSIVE", "PresentationEngine", "Fraction",
]
