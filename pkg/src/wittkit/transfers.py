"""Locally free transfers through symmetric tensors.

For ``B`` free of rank d over ``A`` with basis ``e_1..e_d``, the symmetric
tensors ``TS^d_A(B)`` have the orbit basis ``e_G = sum_{I in G} e_I`` over
multisets ``G`` of size d.  ``TS^d`` acts on the rank-one module
``wedge^d B``.  The scalar ``u(x)`` of that action is a ring map
``TS^d_A(B) -> A``.  On a full tensor ``X = sum_I X_I e_I``,

    u(X) = sum_I X_I det[coords(e_{I_1} e_1) | ... | coords(e_{I_d} e_d)].

A transfer ``f_* g`` forms ``g^(1) + ... + g^(d)`` in ``G(B^{(x)d})``, where
``g^(i)`` puts ``g`` in the i-th slot.  The result is symmetric, and
applying ``u`` gives ``f_* g``.  For ``G_a`` this is the trace, for
``G_m`` the norm, and for big Witt vectors the norm of ``w(t)`` as a unit
of ``B[t]/(t^(n+1))``.  The oracles here compute those values directly
from multiplication matrices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from .exact.algebra import FiniteFreeAlgebra, ProductAlgebra, as_algebra
from .exact.matrix import determinant
from .exact.rings import NotInvertible, Ring
from .exact.series import TruncatedSeriesRing
from .witt.big import BigWittVector, HatWittVector, witt_add, witt_mul_int
from .witt.ptypical import PTypicalWitt, project_ptypical

GROUPS = ("Ga", "Gm", "W", "What", "Wp")


class SymmetryError(AssertionError):
    """A tensor expected to be symmetric is not."""


# --- orbits and symmetric tensors --------------------------------------------------------

def orbit_basis(d: int):
    """Orbits of ``S_d`` on ``{1..d}^d`` as sorted tuples; ``binomial(2d-1, d)`` of them.

    >>> orbit_basis(2)
    [(1, 1), (1, 2), (2, 2)]
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    out = list(combinations_with_replacement(range(1, d + 1), d))
    assert len(out) == comb(2 * d - 1, d)
    return out


def orbit_of(index) -> tuple:
    return tuple(sorted(index))


def _indices(d):
    return list(product(range(d), repeat=d))


class FullTensor:
    """An element of ``B^{(x)d}`` by coordinates on ``e_{i_1} (x) ... (x) e_{i_d}``.

    Indices are 0-based tuples here; orbits are 1-based sorted tuples.
    """

    __slots__ = ("algebra", "d", "coords")

    def __init__(self, algebra: FiniteFreeAlgebra, coords):
        self.algebra = algebra
        self.d = algebra.rank
        self.coords = dict(coords)

    @classmethod
    def pure(cls, algebra, factors):
        """``b_1 (x) ... (x) b_d``."""
        A = algebra.base
        out = {}
        for idx in _indices(algebra.rank):
            c = A.one
            for b, i in zip(factors, idx):
                c = A.mul(c, b[i])
                if A.is_zero(c):
                    break
            if not A.is_zero(c):
                out[idx] = c
        return cls(algebra, out)

    @classmethod
    def slot(cls, algebra, b, i):
        """``1 (x) ... (x) b (x) ... (x) 1`` with ``b`` in slot ``i``."""
        factors = [algebra.one] * algebra.rank
        factors[i] = b
        return cls.pure(algebra, factors)

    def __add__(self, other):
        A = self.algebra.base
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = A.add(out[k], v) if k in out else v
        return FullTensor(self.algebra, {k: v for k, v in out.items() if not A.is_zero(v)})

    def mul_slot(self, b, i):
        """Multiply by ``b`` acting in slot ``i``."""
        B, A = self.algebra, self.algebra.base
        out = {}
        for idx, c in self.coords.items():
            prod_vec = B.mul(B.basis_element(idx[i]), b)
            for j, v in enumerate(prod_vec):
                if A.is_zero(v):
                    continue
                key = idx[:i] + (j,) + idx[i + 1:]
                val = A.mul(c, v)
                out[key] = A.add(out[key], val) if key in out else val
        return FullTensor(self.algebra, {k: v for k, v in out.items() if not A.is_zero(v)})

    def is_symmetric(self):
        A = self.algebra.base
        seen = {}
        for idx in _indices(self.d):
            c = self.coords.get(idx, A.zero)
            key = orbit_of(idx)
            if key in seen and not A.eq(seen[key], c):
                return False
            seen.setdefault(key, c)
        return True


class SymTensor:
    """``sum_G x_G e_G`` in ``TS^d_A(B)``; orbit keys are 1-based sorted tuples."""

    __slots__ = ("algebra", "d", "coords")

    def __init__(self, algebra: FiniteFreeAlgebra, coords):
        self.algebra = algebra
        self.d = algebra.rank
        A = algebra.base
        self.coords = {tuple(k): v for k, v in coords.items() if not A.is_zero(v)}

    @classmethod
    def basis_element(cls, algebra, orbit):
        return cls(algebra, {tuple(orbit): algebra.base.one})

    @classmethod
    def from_full(cls, X: FullTensor):
        """Orbit coordinates of a symmetric full tensor; asymmetry is an error."""
        if not X.is_symmetric():
            raise SymmetryError("tensor is not invariant under the symmetric group")
        A = X.algebra.base
        out = {}
        for idx, c in X.coords.items():
            out[tuple(i + 1 for i in orbit_of(idx))] = c
        return cls(X.algebra, {k: v for k, v in out.items() if not A.is_zero(v)})

    def to_full(self) -> FullTensor:
        out = {}
        for idx in _indices(self.d):
            key = tuple(i + 1 for i in orbit_of(idx))
            if key in self.coords:
                out[idx] = self.coords[key]
        return FullTensor(self.algebra, out)


# --- the u-map ----------------------------------------------------------------------------

def wedge_coefficients(B: FiniteFreeAlgebra):
    """``det[e_{I_1} e_1 | ... | e_{I_d} e_d]`` for every 0-based index tuple ``I``."""
    return _wedge_coefficients(B)


@lru_cache(maxsize=64)
def _wedge_coefficients(B):
    A, d = B.base, B.rank
    prods = [[B.mul(B.basis_element(i), B.basis_element(k)) for k in range(d)] for i in range(d)]
    out = {}
    for idx in _indices(d):
        cols = [prods[idx[k]][k] for k in range(d)]
        rows = [[cols[k][r] for k in range(d)] for r in range(d)]
        out[idx] = determinant(A, rows)
    return out


def u_map(x) -> object:
    """The scalar by which a symmetric tensor acts on ``wedge^d B``.

    Accepts a :class:`SymTensor` or a symmetric :class:`FullTensor`.
    """
    sym = x if isinstance(x, SymTensor) else SymTensor.from_full(x)
    B = sym.algebra
    A = B.base
    wedge = wedge_coefficients(B)
    acc = A.zero
    for idx, w in wedge.items():
        if A.is_zero(w):
            continue
        key = tuple(i + 1 for i in orbit_of(idx))
        c = sym.coords.get(key)
        if c is not None:
            acc = A.add(acc, A.mul(c, w))
    return acc


def u_on_orbit(B: FiniteFreeAlgebra, orbit):
    return u_map(SymTensor.basis_element(B, orbit))


# --- transfers ----------------------------------------------------------------------------

def _as_free(B):
    return as_algebra(B) if not isinstance(B, FiniteFreeAlgebra) else B


def transfer_Ga(B: FiniteFreeAlgebra, g):
    """``u(sum_i g^(i))``; equals the trace."""
    B = _as_free(B)
    X = FullTensor.slot(B, g, 0)
    for i in range(1, B.rank):
        X = X + FullTensor.slot(B, g, i)
    return u_map(X)


def transfer_Gm(B: FiniteFreeAlgebra, g):
    """``u(g (x) ... (x) g)``; equals the norm.  ``g`` must be a unit."""
    B = _as_free(B)
    if not B.is_unit(g):
        raise NotInvertible(f"{B.format(g)} is not a unit of {B.tag}")
    return u_map(FullTensor.pure(B, [g] * B.rank))


def _tensor_series_product(B, w: BigWittVector):
    """Coefficients of ``prod_i w^(i)(t)`` in ``B^{(x)d}[t]/(t^(n+1))``."""
    d, n = B.rank, w.n
    series = w.series()
    acc = [FullTensor.pure(B, [B.one] * d)] + [FullTensor(B, {}) for _ in range(n)]
    for i in range(d):
        new = [FullTensor(B, {}) for _ in range(n + 1)]
        for k in range(n + 1):
            if not acc[k].coords:
                continue
            for j in range(n + 1 - k):
                c = series[j]
                if B.is_zero(c):
                    continue
                new[k + j] = new[k + j] + acc[k].mul_slot(c, i)
        acc = new
    return acc


def transfer_Witt(B: FiniteFreeAlgebra, w: BigWittVector) -> BigWittVector:
    """``u`` applied to every t-coefficient of ``prod_i w^(i)``."""
    B = _as_free(B)
    if w.ring != B:
        raise ValueError("Witt vector must live over the algebra B")
    coeffs = _tensor_series_product(B, w)
    out = [u_map(X) for X in coeffs]
    A = B.base
    if not A.is_one(out[0]):
        raise SymmetryError("constant term of the transferred series is not 1")
    return BigWittVector(A, out[1:])


def transfer_hat(B: FiniteFreeAlgebra, x: HatWittVector) -> HatWittVector:
    """Componentwise on ``W + G_m + Z``; the Z part is multiplied by the rank."""
    B = _as_free(B)
    return HatWittVector(transfer_Witt(B, x.witt), transfer_Gm(B, x.unit), B.rank * x.degree)


# --- oracles ---------------------------------------------------------------------------------

def trace_oracle(B, g):
    return _as_free(B).trace(g)


def norm_oracle(B, g):
    return _as_free(B).norm(g)


def series_algebra(B: FiniteFreeAlgebra, n: int) -> FiniteFreeAlgebra:
    """``B[t]/(t^(n+1))`` as a free algebra over ``A[t]/(t^(n+1))``."""
    S = TruncatedSeriesRing(B.base, n)
    pad = (B.base.zero,) * n
    # base elements may themselves be tuples, so embed constants explicitly
    return B.map_base(S, lambda c: (c,) + pad, tag=f"{B.tag}[t]/(t^{n + 1})")


def witt_norm_oracle(B, w: BigWittVector) -> BigWittVector:
    """Norm of ``w(t)`` computed from the multiplication matrix over ``A[t]/(t^(n+1))``."""
    B = _as_free(B)
    n = w.n
    Bt = series_algebra(B, n)
    series = w.series()
    elem = tuple(tuple(series[k][j] for k in range(n + 1)) for j in range(B.rank))
    nm = Bt.norm(elem)
    return BigWittVector(B.base, nm[1:])


# --- p-typical transfers -------------------------------------------------------------------------

def transfer_ptypical_projected(B, x: PTypicalWitt) -> PTypicalWitt:
    """Lift to a big Witt vector, transfer, project back."""
    B = _as_free(B)
    return project_ptypical(transfer_Witt(B, x.lift()), x.p)


def tensor_power_algebra(B: FiniteFreeAlgebra) -> FiniteFreeAlgebra:
    """``B^{(x)d}`` with ``d = rank B`` as an algebra of rank ``d^d``."""
    return _tensor_power(B)


@lru_cache(maxsize=16)
def _tensor_power(B):
    A, d = B.base, B.rank
    idxs = _indices(d)
    pos = {idx: k for k, idx in enumerate(idxs)}
    N = len(idxs)
    table = [[None] * N for _ in range(N)]
    for a, I in enumerate(idxs):
        for b, J in enumerate(idxs):
            factors = [B.table[I[k]][J[k]] for k in range(d)]
            X = FullTensor.pure(B, factors)
            row = [A.zero] * N
            for idx, c in X.coords.items():
                row[pos[idx]] = c
            table[a][b] = row
    unit = [A.zero] * N
    for idx, c in FullTensor.pure(B, [B.one] * d).coords.items():
        unit[pos[idx]] = c
    labels = ["(x)".join(B.labels[i] for i in idx) for idx in idxs]
    return FiniteFreeAlgebra(A, labels, table, unit, tag=f"({B.tag})^{d}", check=False)


NATIVE_PTYPICAL_MAX_RANK = 3


def transfer_ptypical_native(B, x: PTypicalWitt) -> PTypicalWitt:
    """Sum the slot copies in ``W_n(B^{(x)d})`` with p-typical addition, then apply u.

    The tensor power has rank ``d^d``, so this route is offered for
    ``d <= 3``.
    """
    B = _as_free(B)
    d = B.rank
    if d > NATIVE_PTYPICAL_MAX_RANK:
        raise ValueError(f"native p-typical transfer is limited to rank <= {NATIVE_PTYPICAL_MAX_RANK}")
    T = tensor_power_algebra(B)
    idxs = _indices(d)

    def to_T(X: FullTensor):
        return tuple(X.coords.get(idx, B.base.zero) for idx in idxs)

    def from_T(v):
        return FullTensor(B, {idx: c for idx, c in zip(idxs, v)})

    total = PTypicalWitt.zero(T, x.p, x.n)
    for i in range(d):
        comps = [to_T(FullTensor.slot(B, c, i)) for c in x.components]
        total = total + PTypicalWitt(T, x.p, comps)
    return PTypicalWitt(B.base, x.p, [u_map(from_T(c)) for c in total.components])


# --- combinations ---------------------------------------------------------------------------------

def transfer(group: str, B, g):
    """Dispatch on the group name: ``Ga``, ``Gm``, ``W``, ``What`` or ``Wp``."""
    if group == "Ga":
        return transfer_Ga(B, g)
    if group == "Gm":
        return transfer_Gm(B, g)
    if group == "W":
        return transfer_Witt(B, g)
    if group == "What":
        return transfer_hat(B, g)
    if group == "Wp":
        return transfer_ptypical_projected(B, g)
    raise ValueError(f"unknown group {group!r}; choose from {GROUPS}")


def group_zero(group, A: Ring, n=None, p=None):
    if group == "Ga":
        return A.zero
    if group == "Gm":
        return A.one
    if group == "W":
        return BigWittVector.identity(A, n)
    if group == "What":
        return HatWittVector.zero(A, n)
    if group == "Wp":
        return PTypicalWitt.zero(A, p, n)
    raise ValueError(f"unknown group {group!r}")


def group_add(group, A: Ring, a, b):
    if group == "Ga":
        return A.add(a, b)
    if group == "Gm":
        return A.mul(a, b)
    if group in ("W", "What", "Wp"):
        return a + b
    raise ValueError(f"unknown group {group!r}")


def group_mul_int(group, A: Ring, a, k: int):
    if group == "Ga":
        return A.mul_int(a, k)
    if group == "Gm":
        return A.pow(a, k) if k >= 0 else A.pow(A.inv(a), -k)
    if group == "W":
        return witt_mul_int(a, k)
    if group in ("What", "Wp"):
        return a * k
    raise ValueError(f"unknown group {group!r}")


def transfer_cycle(group: str, terms, A: Ring, n=None, p=None):
    """``sum_i m_i (f_i)_* g_i`` for terms ``(m_i, B_i, g_i)``."""
    acc = group_zero(group, A, n, p)
    for m, B, g in terms:
        acc = group_add(group, A, acc, group_mul_int(group, A, transfer(group, B, g), m))
    return acc


def product_element(P: ProductAlgebra, parts):
    return P.join(parts)


def witt_over(B, w: BigWittVector, fn):
    """Apply a ring map ``fn`` coefficientwise to a Witt vector."""
    return BigWittVector(B, [fn(c) for c in w.coeffs])


def pull_back(group, A, g, fn):
    """Push ``g`` along a ring map ``fn`` into ``A`` (``s^*`` for a point)."""
    if group in ("Ga", "Gm"):
        return fn(g)
    if group == "W":
        return witt_over(A, g, fn)
    if group == "What":
        return HatWittVector(witt_over(A, g.witt, fn), fn(g.unit), g.degree)
    if group == "Wp":
        return PTypicalWitt(A, g.p, [fn(c) for c in g.components])
    raise ValueError(f"unknown group {group!r}")


def point_decomposition(group, B, g, roots):
    """``sum_i d_i r_i^* g`` for ``B = k[x]/prod (x - a_i)^(d_i)``.

    ``roots`` lists ``(a_i, d_i)``; ``B`` must be monogenic.
    """
    A = B.base
    terms = []
    for a, mult in roots:
        value = pull_back(group, A, g, lambda c, a=a: B.evaluate_at(c, A.convert(a)))
        terms.append(group_mul_int(group, A, value, mult))
    acc = group_zero(group, A, getattr(g, "n", None), getattr(g, "p", None))
    for t in terms:
        acc = group_add(group, A, acc, t)
    return acc


def base_change_algebra(B: FiniteFreeAlgebra, ring: Ring, fn) -> FiniteFreeAlgebra:
    """``B (x)_A A'`` along ``fn: A -> A'``; same basis, mapped structure constants."""
    return B.map_base(ring, fn, tag=f"{B.tag} (x) {ring.tag}")


__all__ = [
    "GROUPS", "SymmetryError", "orbit_basis", "orbit_of", "FullTensor", "SymTensor",
    "wedge_coefficients", "u_map", "u_on_orbit", "transfer_Ga", "transfer_Gm", "transfer_Witt",
    "transfer_hat", "trace_oracle", "norm_oracle", "series_algebra", "witt_norm_oracle",
    "transfer_ptypical_projected", "tensor_power_algebra", "transfer_ptypical_native",
    "transfer", "transfer_cycle", "group_zero", "group_add", "group_mul_int", "witt_add",
    "product_element", "witt_over", "pull_back", "point_decomposition",
    "base_change_algebra",
]
