"""Exact matrices, division-free determinants and Howell normal form.

Howell form over Z/m is the canonical echelon form whose row span is closed
under the annihilator trick: for a pivot row r with pivot g, the row
(m/g)*r (which vanishes in the pivot column) lies in the span of the rows
below.  With pivots normalised to divisors of m and entries above each
pivot reduced into ``range(pivot)``, two matrices with the same row span
have identical Howell forms, and membership is decided by reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .rings import IntegersMod, Ring, RingMismatch, prime_power


class ExactMatrix:
    """A rectangular matrix of raw values of ``ring`` (row-major tuples)."""

    __slots__ = ("ring", "rows", "ncols")

    def __init__(self, ring: Ring, rows, ncols=None):
        rows = tuple(tuple(ring.convert(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("matrix rows have different lengths")
        self.ring = ring
        self.rows = rows
        self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.ring == other.ring
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ring, self.rows, self.ncols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"matrix ring mismatch: {self.ring} vs {other.ring}")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        R = self.ring
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = [[R.sum(R.mul(a, b) for a, b in zip(row, col)) for col in cols]
               for row in self.rows]
        return ExactMatrix(R, out, other.ncols)

    def transpose(self):
        return ExactMatrix(self.ring, list(zip(*self.rows)), self.nrows)

    def charpoly(self):
        """Coefficients of ``det(y*I - M)``, low degree first (monic)."""
        if self.nrows != self.ncols:
            raise ValueError("characteristic polynomial needs a square matrix")
        return berkowitz(self.ring, self.rows)

    def det(self):
        return determinant(self.ring, self.rows)

    def __repr__(self):
        R = self.ring
        body = "; ".join(", ".join(R.format(v) for v in r) for r in self.rows)
        return f"ExactMatrix({R}, [{body}])"


def berkowitz(R: Ring, M):
    """Characteristic polynomial ``det(y*I - M)`` by Berkowitz's algorithm.

    Uses only ring operations, so it works over any commutative ring.
    Returns coefficients low degree first.
    """
    n = len(M)
    poly = [R.one]  # highest degree first while building
    for k in range(n):
        a = M[k][k]
        row = M[k][:k]
        col = [M[i][k] for i in range(k)]
        toeplitz = [R.one, R.neg(a)]
        vec = col
        for _ in range(k):
            toeplitz.append(R.neg(R.sum(R.mul(x, y) for x, y in zip(row, vec))))
            vec = [R.sum(R.mul(M[i][j], vec[j]) for j in range(k)) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = R.zero
            for j in range(min(i, k) + 1):
                if i - j < len(toeplitz):
                    acc = R.add(acc, R.mul(toeplitz[i - j], poly[j]))
            new.append(acc)
        poly = new
    return poly[::-1]


def determinant(R: Ring, M):
    n = len(M)
    if n == 0:
        return R.one
    c0 = berkowitz(R, M)[0]
    return c0 if n % 2 == 0 else R.neg(c0)


# --- Howell form over Z/m ------------------------------------------------------

def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _normalising_unit(a, m):
    """A unit ``u`` modulo ``m`` with ``u*a ≡ gcd(a, m) (mod m)``."""
    g = gcd(a, m)
    if g == 0:
        return 1
    mm = m // g
    if mm == 1:
        return 1
    u = pow((a // g) % mm, -1, mm)
    while gcd(u, m) != 1:
        u += mm
    return u % m


def _howell_rows(rows, m, ncols):
    A = [[v % m for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if not b:
                continue
            a = A[r][c] if r < len(A) else 0
            g, s, t = _xgcd(a, b)
            u, v = -b // g, a // g
            ra, rb = A[r], A[i]
            A[r] = [(s * x + t * y) % m for x, y in zip(ra, rb)]
            A[i] = [(u * x + v * y) % m for x, y in zip(ra, rb)]
        if r >= len(A) or not A[r][c]:
            continue
        unit = _normalising_unit(A[r][c], m)
        if unit != 1:
            A[r] = [x * unit % m for x in A[r]]
        g = A[r][c]
        for i in range(r):
            q = A[i][c] // g
            if q:
                A[i] = [(x - q * y) % m for x, y in zip(A[i], A[r])]
        pivots.append((r, c))
        ann = [(m // g) * x % m for x in A[r]]
        if any(ann):
            A.append(ann)
        r += 1
    return [tuple(A[i]) for i in range(r)], [c for _, c in pivots]


@dataclass(frozen=True)
class HowellCertificate:
    """Witness data: pivot columns and the annihilator check per pivot row."""

    modulus: int
    pivot_columns: tuple
    closure_checked: bool


def howell_form(M: ExactMatrix):
    """Howell normal form of ``M`` over ``Z/m``.

    Returns ``(H, certificate)`` where ``H`` is canonical for the row span.

    >>> from wittkit.exact.rings import Zmod
    >>> H, _ = howell_form(ExactMatrix(Zmod(4), [[2, 2]]))
    >>> H.rows
    ((2, 2),)
    """
    R = M.ring
    if not isinstance(R, IntegersMod):
        raise RingMismatch(f"Howell form needs Z/m, got {R}")
    m = R.m
    rows, cols = _howell_rows(M.rows, m, M.ncols)
    H = ExactMatrix(R, rows, M.ncols)
    closed = all(is_member(H, tuple((m // r[c]) * x % m for x in r))
                 for r, c in zip(rows, cols))
    if not closed:
        raise AssertionError("Howell closure failed")
    return H, HowellCertificate(m, tuple(cols), closed)


def reduce_vector(H: ExactMatrix, v):
    """Reduce ``v`` against a Howell form; returns the residual vector."""
    m = H.ring.m
    v = [x % m for x in v]
    for row in H.rows:
        c = next(j for j, x in enumerate(row) if x)
        g = row[c]
        q = v[c] // g
        if q:
            v = [(x - q * y) % m for x, y in zip(v, row)]
    return tuple(v)


def is_member(H: ExactMatrix, v) -> bool:
    """Whether ``v`` lies in the row span of the Howell form ``H``."""
    return not any(reduce_vector(H, v))


# --- incremental sparse Howell basis over a chain ring Z/p^n ---------------------

class SparseHowellBasis:
    """Row span over ``Z/p^n`` kept as a strong echelon basis of sparse rows.

    Rows are dicts ``column -> residue``; the leading entry of a row is its
    smallest column.  Every stored pivot is ``p^a`` and the row ``p^(n-a)*r``
    has been reduced into the basis, so reduction decides membership.
    """

    def __init__(self, p: int, n: int):
        self.p, self.n, self.m = p, n, p ** n
        self.pivots = {}  # column -> (exponent a, row)

    def _valuation(self, x):
        a = 0
        while x % self.p == 0:
            x //= self.p
            a += 1
        return a

    def reduce(self, v: dict) -> dict:
        """Residual of ``v`` after reduction (a fresh dict)."""
        m = self.m
        v = {c: x % m for c, x in v.items() if x % m}
        done = {}
        while v:
            c = min(v)
            x = v.pop(c)
            piv = self.pivots.get(c)
            if piv is not None:
                a, row = piv
                pa = self.p ** a
                if x % pa == 0:
                    q = x // pa
                    for k, y in row.items():
                        if k == c:
                            continue
                        w = (v.get(k, 0) - q * y) % m
                        if w:
                            v[k] = w
                        else:
                            v.pop(k, None)
                    continue
            done[c] = x
            # the remaining part cannot lower column c further; keep going
        return done

    def insert(self, v: dict) -> bool:
        """Add ``v`` to the span; returns whether the span grew."""
        m, p = self.m, self.p
        grew = False
        stack = [{c: x % m for c, x in v.items() if x % m}]
        while stack:
            v = stack.pop()
            while v:
                c = min(v)
                x = v[c]
                a = self._valuation(x)
                piv = self.pivots.get(c)
                if piv is not None and a >= piv[0]:
                    b, row = piv
                    q = x // p ** b
                    for k, y in row.items():
                        w = (v.get(k, 0) - q * y) % m
                        if w:
                            v[k] = w
                        else:
                            v.pop(k, None)
                    continue
                unit = pow(x // p ** a, -1, m)
                row = {k: y * unit % m for k, y in v.items()}
                self.pivots[c] = (a, row)
                grew = True
                ann = {k: y * p ** (self.n - a) % m for k, y in row.items()}
                ann = {k: y for k, y in ann.items() if y}
                if ann:
                    stack.append(ann)
                if piv is not None:
                    stack.append(dict(piv[1]))
                break
        return grew

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rank_profile(self):
        """Sorted ``(column, exponent)`` pairs of the pivots."""
        return sorted((c, a) for c, (a, _) in self.pivots.items())

    def order_log(self):
        """log_p of the size of the span."""
        return sum(self.n - a for a, _ in self.pivots.values())


def quotient_order_log(basis: SparseHowellBasis, columns) -> int:
    """log_p of the order of ``(Z/p^n)^columns / span``."""
    cols = set(columns)
    return sum(basis.n if c not in basis.pivots else basis.pivots[c][0] for c in cols)


def chain_ring_of(ring: Ring):
    """``(p, n)`` when ``ring`` is ``Z/p^n``, else ``None``."""
    if isinstance(ring, IntegersMod):
        return prime_power(ring.m)
    return None
