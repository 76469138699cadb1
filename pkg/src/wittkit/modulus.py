"""Zero-cycles on the affine line and relative Chow groups of (P^1, D).

Closed points of A^1 over a field k are monic irreducible polynomials.  A
cycle is a finite formal sum of points.  For the modulus ``(n+1)*inf`` the
Chow group of relative zero-cycles is ``W_n(k) + Z``: the point with minimal
polynomial ``x^m + a_1 x^(m-1) + ... + a_m`` maps to ``1 + a_1 t + ... +
a_m t^m``, and the Z summand records the degree.  With an extra modulus
``eps*0`` the target is the extension ``W^_n`` whose unit component is
``(-1)^m a_m``.

Cycle-level Witt operations are realised by resultants:

* ``F_s`` pushes forward along ``x -> x^s``: ``Res_y(pi(y), x - y^s)``,
* ``V_s`` pulls back: ``pi(x^s)``,
* ``star`` is the composed product ``Res_y(pi_1(y), y^deg(pi_2) pi_2(x/y))``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .exact.factor import factor_monic, is_irreducible
from .exact.parse import ParseError, parse_polynomial
from .exact.poly import Polynomial
from .exact.resultant import resultant
from .exact.rings import PrimeField, RationalField, Ring, RingMismatch
from .exact import upoly as U
from .witt.big import BigWittVector, HatWittVector, witt_add, witt_neg, hat_mul_int

VAR = "x"
#: Irreducibility of closed points is verified up to this degree.
IRREDUCIBILITY_CHECK_MAX_DEGREE = 8


def _require_field(field: Ring):
    if not isinstance(field, (PrimeField, RationalField)):
        raise ValueError(f"base field must be F_p or Q, got {field}")


def poly_x(field: Ring, text_or_coeffs) -> Polynomial:
    if isinstance(text_or_coeffs, str):
        return parse_polynomial(text_or_coeffs, field, (VAR,))
    return Polynomial.from_dense(field, list(text_or_coeffs), VAR)


# --- points and cycles --------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedPoint:
    """A closed point of A^1, given by its monic irreducible polynomial."""

    poly: Polynomial
    verified: bool = True

    def __post_init__(self):
        f = self.poly
        if f.nvars != 1 or f.degree() < 1 or not f.is_monic():
            raise ValueError(f"closed point needs a monic polynomial of degree >= 1, got {f}")

    @classmethod
    def make(cls, field: Ring, poly, check=True):
        _require_field(field)
        f = poly if isinstance(poly, Polynomial) else poly_x(field, poly)
        if f.ring != field:
            raise RingMismatch(f"point over {f.ring}, expected {field}")
        f = f.monic()
        verified = False
        if check and f.degree() <= IRREDUCIBILITY_CHECK_MAX_DEGREE:
            if not is_irreducible(f):
                raise ValueError(f"{f} is not irreducible over {field}")
            verified = True
        return cls(f, verified)

    @property
    def field(self):
        return self.poly.ring

    @property
    def degree(self):
        return self.poly.degree()

    def is_origin(self):
        return self.poly == Polynomial.gen(self.field, (VAR,), VAR)

    def sort_key(self):
        return (self.degree, str(self.poly))

    def __eq__(self, other):
        return isinstance(other, ClosedPoint) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return f"[{self.poly}]"


class ZeroCycle:
    """Finite formal sum of closed points with nonzero integer multiplicities."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Ring, terms=None):
        _require_field(field)
        self.field = field
        clean = {}
        for pt, m in (terms or {}).items():
            if pt.field != field:
                raise RingMismatch(f"point over {pt.field} in a cycle over {field}")
            if m:
                clean[pt] = clean.get(pt, 0) + m
        self.terms = {pt: m for pt, m in clean.items() if m}

    @classmethod
    def point(cls, field, poly, mult=1, check=True):
        return cls(field, {ClosedPoint.make(field, poly, check): mult})

    @classmethod
    def empty(cls, field):
        return cls(field)

    def __eq__(self, other):
        return isinstance(other, ZeroCycle) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __add__(self, other):
        if other.field != self.field:
            raise RingMismatch(f"cycles over {self.field} and {other.field}")
        out = dict(self.terms)
        for pt, m in other.terms.items():
            out[pt] = out.get(pt, 0) + m
        return ZeroCycle(self.field, out)

    def __neg__(self):
        return ZeroCycle(self.field, {pt: -m for pt, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return ZeroCycle(self.field, {pt: k * m for pt, m in self.terms.items()})

    def degree(self):
        return sum(m * pt.degree for pt, m in self.terms.items())

    def support(self):
        return sorted(self.terms, key=ClosedPoint.sort_key)

    def items(self):
        return [(pt, self.terms[pt]) for pt in self.support()]

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, (pt, m) in enumerate(self.items()):
            sign = "-" if m < 0 else "+"
            k = abs(m)
            body = f"{'' if k == 1 else k}{pt}"
            out += (("-" if sign == "-" else "") + body) if i == 0 else f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ZeroCycle({self.field}, {self})"

    def to_json(self):
        return [{"poly": str(pt.poly), "mult": m} for pt, m in self.items()]

    @classmethod
    def from_json(cls, field, data):
        out = cls.empty(field)
        for item in data:
            out = out + cls.point(field, item["poly"], int(item["mult"]))
        return out


_CYCLE_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*\[([^\]]+)\]\s*")


def parse_cycle(text: str, field: Ring) -> ZeroCycle:
    """Parse ``"[x^2+1] + 2[x-3] - [x]"``; each bracket holds a point.

    A bracket holding a reducible polynomial is read as its divisor.
    """
    text = text.strip()
    if text in ("", "0"):
        return ZeroCycle.empty(field)
    pos, out = 0, ZeroCycle.empty(field)
    while pos < len(text):
        m = _CYCLE_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse cycle near {text[pos:]!r}")
        sign, k, body = m.groups()
        mult = (int(k) if k else 1) * (-1 if sign == "-" else 1)
        out = out + mult * divisor_of_polynomial(poly_x(field, body))
        pos = m.end()
    return out


def divisor_of_polynomial(f: Polynomial) -> ZeroCycle:
    """``div(f)`` on A^1 for a nonzero polynomial (factored)."""
    if f.is_zero():
        raise ValueError("divisor of the zero polynomial")
    field = f.ring
    if f.degree() < 1:
        return ZeroCycle.empty(field)
    return ZeroCycle(field, {ClosedPoint(g, True): k for g, k in factor_monic(f.monic())})


# --- divisors with rational coefficients on P^1 ------------------------------------------------

INFINITY = "inf"


class QDivisorP1:
    """Positive rational combination of closed points of P^1 (``INFINITY`` allowed)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        clean = {}
        for pt, c in terms.items():
            c = Fraction(c)
            if c <= 0:
                raise ValueError("modulus coefficients must be positive")
            clean[pt] = c
        self.terms = clean

    @classmethod
    def at_infinity(cls, field, r):
        return cls(field, {INFINITY: r})

    @classmethod
    def at_point(cls, field, point, r):
        return cls(field, {point: r})

    def round_up(self):
        return QDivisorP1(self.field, {pt: ceil(c) for pt, c in self.terms.items()})

    def support(self):
        return list(self.terms)

    def __eq__(self, other):
        return isinstance(other, QDivisorP1) and self.terms == other.terms

    def __str__(self):
        parts = []
        for pt, c in self.terms.items():
            parts.append(f"{c}*{'inf' if pt == INFINITY else pt}")
        return " + ".join(parts)


# --- rational functions on P^1 ----------------------------------------------------------------

def _poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    R = f.ring
    a, b = f.dense(), g.dense()
    while b:
        a, b = b, U.divmod_monic(R, a, b)[1]
    return Polynomial.from_dense(R, a, VAR).monic() if a else f.zero_like()


def _poly_div(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = U.divmod_monic(f.ring, f.dense(), g.dense())
    if r:
        raise ArithmeticError("inexact polynomial division")
    return Polynomial.from_dense(f.ring, q, VAR)


def _sympy_fraction(text):
    """Numerator and denominator of a rational expression in ``x``, via sympy."""
    import sympy
    x = sympy.Symbol(VAR)
    try:
        expr = sympy.parse_expr(text.replace("^", "**"), local_dict={VAR: x}, evaluate=True)
    except Exception as exc:
        raise ParseError(f"cannot read rational function {text!r}: {exc}") from None
    if expr.free_symbols - {x}:
        raise ParseError(f"rational function {text!r} uses variables other than {VAR}")
    num, den = sympy.fraction(sympy.together(expr))
    return sympy.Poly(num, x), sympy.Poly(den, x)


def _poly_from_sympy(f, field):
    coeffs = [field.from_fraction(Fraction(int(c.p), int(c.q))) for c in reversed(f.all_coeffs())]
    return poly_x(field, coeffs)


class RationalFunctionP1:
    """``scalar * num / den`` with coprime monic ``num`` and ``den``."""

    __slots__ = ("field", "scalar", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        field = num.ring
        _require_field(field)
        if den is None:
            den = num.const_like(1)
        if den.is_zero():
            raise ZeroDivisionError("denominator is zero")
        if num.is_zero():
            raise ValueError("f = 0 is not allowed")
        lc = field.mul(num.leading_coeff(), field.inv(den.leading_coeff()))
        num, den = num.monic(), den.monic()
        g = _poly_gcd(num, den)
        if g.degree() > 0:
            num, den = _poly_div(num, g), _poly_div(den, g)
        self.field = field
        self.scalar = lc
        self.num = num
        self.den = den

    @classmethod
    def parse(cls, text: str, field: Ring):
        """A rational expression in ``x`` such as ``"1 + 1/x^2"`` or ``"(x^2-1)/(x-2)"``.

        >>> from wittkit.exact.rings import QQ
        >>> str(RationalFunctionP1.parse("1 + 1/x^2", QQ))
        '(x^2 + 1)/(x^2)'
        """
        if "/" not in text:
            return cls(poly_x(field, text))
        num, den = _sympy_fraction(text)
        return cls(_poly_from_sympy(num, field), _poly_from_sympy(den, field))

    def is_one(self):
        return self.field.is_one(self.scalar) and self.num == self.den

    def minus_one(self):
        """Numerator of ``f - 1`` over ``den`` (may be zero)."""
        return self.num.scale(self.scalar) - self.den

    def __str__(self):
        head = "" if self.field.is_one(self.scalar) else f"{self.field.format(self.scalar)}*"
        if self.den.degree() == 0:
            return f"{head}({self.num})"
        return f"{head}({self.num})/({self.den})"


def _multiplicity(g: Polynomial, pi: Polynomial) -> int:
    R = g.ring
    a, p = g.dense(), pi.dense()
    k = 0
    while True:
        q, r = U.divmod_monic(R, a, p)
        if r:
            return k
        a, k = q, k + 1


def valuation_at(f_num: Polynomial, f_den: Polynomial, point) -> float:
    """Order of ``f_num / f_den`` at a point of P^1 (``inf`` for f = 0)."""
    if f_num.is_zero():
        return float("inf")
    if point == INFINITY:
        return f_den.degree() - f_num.degree()
    return _multiplicity(f_num, point.poly) - _multiplicity(f_den, point.poly)


def is_admissible(f: RationalFunctionP1, D: QDivisorP1) -> bool:
    """``v_P(f - 1) >= D_P`` at every ``P`` in the support of ``D``.

    ``f = 1`` is admissible for every ``D``.  At a point with positive
    coefficient, ``v_P(f-1) > 0`` forces ``f`` to be regular and invertible.
    """
    h = f.minus_one()
    for pt, c in D.terms.items():
        if valuation_at(h, f.den, pt) < c:
            return False
    return True


def divisor_of(f: RationalFunctionP1) -> ZeroCycle:
    """Zeros minus poles of ``f`` on A^1."""
    return divisor_of_polynomial(f.num) - divisor_of_polynomial(f.den)


# --- the comparison maps ------------------------------------------------------------------

def reversed_series(pi: Polynomial, n: int):
    """``1 + a_1 t + ... + a_m t^m`` truncated to length n."""
    m = pi.degree()
    R = pi.ring
    dense = pi.dense()
    return [R.one] + [dense[m - k] if k <= m else R.zero for k in range(1, n + 1)]


def phi(c: ZeroCycle, n: int) -> BigWittVector:
    """``sum m_i [pi_i] -> prod (reversed pi_i)^(m_i)`` in ``W_n``."""
    R = c.field
    acc = BigWittVector.identity(R, n)
    for pt, m in c.items():
        w = BigWittVector(R, reversed_series(pt.poly, n)[1:])
        if m < 0:
            w, m = witt_neg(w), -m
        for _ in range(m):
            acc = witt_add(acc, w)
    return acc


def point_unit(pt: ClosedPoint):
    R = pt.field
    c = pt.poly.constant_term()
    return R.neg(c) if pt.degree % 2 else c


def phi_hat(c: ZeroCycle, n: int) -> HatWittVector:
    """``(phi(c), prod ((-1)^deg pi * pi(0))^m, deg c)``; needs 0 outside the support."""
    R = c.field
    for pt in c.terms:
        if pt.is_origin():
            raise ValueError("phi_hat: the cycle meets the point 0")
    acc = HatWittVector.zero(R, n)
    for pt, m in c.items():
        x = HatWittVector(BigWittVector(R, reversed_series(pt.poly, n)[1:]), point_unit(pt), pt.degree)
        acc = acc + hat_mul_int(x, m)
    return acc


def _two_var(f: Polynomial, name: str) -> Polynomial:
    return f.rename((name,)).embed((VAR, "y"))


def _apply_pointwise(c: ZeroCycle, fn) -> ZeroCycle:
    out = ZeroCycle.empty(c.field)
    for pt, m in c.items():
        out = out + m * divisor_of_polynomial(fn(pt.poly))
    return out


def frobenius_polynomial(pi: Polynomial, s: int) -> Polynomial:
    """``Res_y(pi(y), x - y^s)``: monic, roots are s-th powers of pi's roots."""
    R = pi.ring
    gens = (VAR, "y")
    f = _two_var(pi, "y")
    g = Polynomial.gen(R, gens, VAR) - Polynomial.gen(R, gens, "y") ** s
    return resultant(f, g, "y")


def verschiebung_polynomial(pi: Polynomial, s: int) -> Polynomial:
    x = Polynomial.gen(pi.ring, (VAR,), VAR)
    return pi.subs({VAR: x ** s})


def composed_product(p1: Polynomial, p2: Polynomial) -> Polynomial:
    """Monic polynomial whose roots are the products of roots of p1 and p2."""
    R = p1.ring
    gens = (VAR, "y")
    d2 = p2.degree()
    f = _two_var(p1, "y")
    # y^d2 * p2(x/y) = sum_k c_k x^k y^(d2-k)
    g = Polynomial(R, gens, {(k, d2 - k): c for (k,), c in p2.terms.items()})
    return resultant(f, g, "y")


def cycle_frobenius(s: int, c: ZeroCycle) -> ZeroCycle:
    if s < 1:
        raise ValueError("s must be at least 1")
    if s == 1:
        return c
    return _apply_pointwise(c, lambda pi: frobenius_polynomial(pi, s))


def cycle_verschiebung(s: int, c: ZeroCycle) -> ZeroCycle:
    if s < 1:
        raise ValueError("s must be at least 1")
    if s == 1:
        return c
    return _apply_pointwise(c, lambda pi: verschiebung_polynomial(pi, s))


def cycle_star(c1: ZeroCycle, c2: ZeroCycle) -> ZeroCycle:
    if c1.field != c2.field:
        raise RingMismatch(f"cycles over {c1.field} and {c2.field}")
    out = ZeroCycle.empty(c1.field)
    for p1, m1 in c1.items():
        for p2, m2 in c2.items():
            out = out + (m1 * m2) * divisor_of_polynomial(composed_product(p1.poly, p2.poly))
    return out


def unit_cycle(field) -> ZeroCycle:
    """The point ``x = 1``, image of the unit."""
    return ZeroCycle.point(field, "x - 1")


# --- Chow groups of (P^1, D) ------------------------------------------------------------------

def modulus_divisor(field, r, eps=None) -> QDivisorP1:
    """``r*inf``, or ``eps*0 + r*inf`` when ``eps`` is given."""
    terms = {INFINITY: Fraction(r)}
    if eps is not None:
        terms[ClosedPoint.make(field, "x")] = Fraction(eps)
    return QDivisorP1(field, terms)


def chow_reduce(c: ZeroCycle, D: QDivisorP1):
    """Normal form of ``c`` in ``CH_0(P^1, D)`` for ``D = r*inf`` or ``eps*0 + r*inf``.

    Returns ``(phi(c, n), deg c)`` with ``n = ceil(r) - 1``; the Witt part is
    a hat vector when ``D`` also contains the origin.
    """
    if INFINITY not in D.terms:
        raise ValueError("the modulus must contain the point at infinity")
    finite = [pt for pt in D.terms if pt != INFINITY]
    if any(not pt.is_origin() for pt in finite):
        raise ValueError("only moduli supported at 0 and infinity are handled")
    n = ceil(D.terms[INFINITY]) - 1
    for pt in c.terms:
        if pt in finite:
            raise ValueError(f"the cycle meets the modulus at {pt}")
    if finite:
        return phi_hat(c, n), c.degree()
    return phi(c, n), c.degree()


# --- generators ---------------------------------------------------------------------------------

def random_monic(field, degree, rng: random.Random) -> Polynomial:
    coeffs = [field.random(rng, 5) for _ in range(degree)] + [field.one]
    return poly_x(field, coeffs)


def random_point(field, degree, rng: random.Random) -> ClosedPoint:
    for _ in range(10000):
        f = random_monic(field, degree, rng)
        if is_irreducible(f):
            return ClosedPoint(f, True)
    raise RuntimeError(f"no irreducible polynomial of degree {degree} found")


def random_cycle(field, rng, max_points=3, max_degree=3, max_mult=2, avoid_origin=False):
    out = ZeroCycle.empty(field)
    for _ in range(rng.randint(1, max_points)):
        pt = random_point(field, rng.randint(1, max_degree), rng)
        if avoid_origin and pt.is_origin():
            continue
        m = rng.choice([k for k in range(-max_mult, max_mult + 1) if k])
        out = out + ZeroCycle(field, {pt: m})
    return out


def random_admissible(field, n, rng, hat=False, max_extra_degree=3) -> RationalFunctionP1:
    """``f = 1 + h/den`` with ``deg den - deg h >= n + 1`` (and ``f(0) = 1`` if ``hat``)."""
    for _ in range(1000):
        m = n + 1 + rng.randint(0, max_extra_degree)
        den = random_monic(field, m, rng)
        if hat and field.is_zero(den.constant_term()):
            continue
        hdeg = rng.randint(-1, m - n - 1)
        coeffs = [field.random(rng, 5) for _ in range(hdeg + 1)]
        if hat and coeffs:
            coeffs[0] = field.zero
        h = poly_x(field, coeffs)
        num = den + h
        f = RationalFunctionP1(num, den)
        return f
    raise RuntimeError("failed to generate an admissible function")


# --- Hasse-Arf ------------------------------------------------------------------------------------

@dataclass
class HasseArfReport:
    r: Fraction
    samples: int
    agreements: int
    disagreements: list
    admissible_counts: tuple
    mechanism: str

    @property
    def passed(self):
        return not self.disagreements and self.agreements == self.samples

    def to_json(self):
        return {"r": str(self.r), "ceil_r": ceil(self.r), "samples": self.samples,
                "agreements": self.agreements, "disagreements": self.disagreements,
                "admissible_for_r": self.admissible_counts[0],
                "admissible_for_ceil_r": self.admissible_counts[1],
                "mechanism": self.mechanism, "pass": self.passed}


def _function_with_order(field, point, k, rng):
    """``f = 1 + g`` with ``v_point(g) = k`` exactly (k >= 0)."""
    if point == INFINITY:
        # v_inf(h/den) = deg den - deg h
        for _ in range(100):
            m = k + rng.randint(0, 2)
            den = random_monic(field, m, rng)
            coeffs = [field.random(rng, 5) for _ in range(m - k)] + [field.from_int(rng.randint(1, 2))]
            if field.is_zero(coeffs[-1]):
                continue
            num = den + poly_x(field, coeffs)
            if not num.is_zero():
                return RationalFunctionP1(num, den)
        raise RuntimeError("could not build a function with the requested order")
    pi = point.poly
    for _ in range(100):
        den = random_monic(field, rng.randint(0, 2), rng)
        unit = random_monic(field, rng.randint(0, 2), rng)
        if _multiplicity(den, pi) or _multiplicity(unit, pi):
            continue
        h = (pi ** k) * unit
        num = den + h
        if num.is_zero():
            continue
        return RationalFunctionP1(num, den)
    raise RuntimeError("could not build a function with the requested order")


def hasse_arf_check(r, samples=100, seed=0, field=None) -> HasseArfReport:
    """Compare admissibility for ``r*P`` and ``ceil(r)*P`` on generated functions.

    Functions ``f = 1 + g`` are generated with ``v_P(g)`` running through
    ``0 .. ceil(r) + 2`` at ``P = inf`` and at random finite points.
    """
    from .exact.rings import GF
    r = Fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    rng = random.Random(seed)
    fields = [field] if field is not None else [GF(3), GF(5), GF(7)]
    top = ceil(r)
    agreements, disagreements = 0, []
    count_r = count_c = 0
    for i in range(samples):
        F = fields[i % len(fields)]
        if i % 2 == 0:
            point = INFINITY
        else:
            point = random_point(F, rng.randint(1, 2), rng)
        k = rng.randint(0, top + 2)
        f = _function_with_order(F, point, k, rng)
        a = is_admissible(f, QDivisorP1(F, {point: r}))
        b = is_admissible(f, QDivisorP1(F, {point: top}))
        count_r += a
        count_c += b
        if a == b:
            agreements += 1
        else:
            disagreements.append({"index": i, "field": F.tag, "f": str(f),
                                  "point": "inf" if point == INFINITY else str(point),
                                  "order": k})
    mechanism = ("valuations of f - 1 are integers, so v >= r holds exactly when "
                 "v >= ceil(r); the admissibility conditions coincide")
    return HasseArfReport(r, samples, agreements, disagreements, (count_r, count_c), mechanism)


# --- principal divisors from homotopies -------------------------------------------------------------

@dataclass
class GraphCheck:
    A: Polynomial
    B: Polynomial
    boundary: ZeroCycle
    pushed_divisor: ZeroCycle

    @property
    def passed(self):
        return self.boundary == self.pushed_divisor


def graph_boundary_check(A: Polynomial, B: Polynomial) -> GraphCheck:
    """The graph ``V = {A(x) - u B(x) = 0}`` of ``u = A/B`` in ``(P^1 - {1}) x A^1``.

    ``A``, ``B`` monic of equal degree make ``V`` finite over ``P^1 - {1}``
    (the leading coefficient in x is ``1 - u``).  The fibres over ``u = 0``
    and ``u = inf`` give the boundary ``(i_0 - i_inf)^* V``; the right side
    is ``q_* div(p)`` with ``p = u|_V`` and ``q`` the projection to A^1.
    """
    if not (A.is_monic() and B.is_monic()) or A.degree() != B.degree():
        raise ValueError("A and B must be monic of the same degree")
    field = A.ring
    gens = ("u", "v", VAR)
    Ax, Bx = A.embed(gens), B.embed(gens)
    u = Polynomial.gen(field, gens, "u")
    v = Polynomial.gen(field, gens, "v")
    # homogeneous fibre equation v*A(x) - u*B(x) on P^1 with coordinates [u:v]
    V = v * Ax - u * Bx
    at_zero = V.subs({"u": 0, "v": 1}).drop((VAR,))
    at_inf = V.subs({"u": 1, "v": 0}).drop((VAR,))
    boundary = divisor_of_polynomial(at_zero) - divisor_of_polynomial(at_inf)
    pushed = divisor_of(RationalFunctionP1(A, B))
    return GraphCheck(A, B, boundary, pushed)
