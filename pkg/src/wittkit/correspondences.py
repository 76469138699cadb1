"""Finite correspondences cut out by one monic equation, and the cycle corpus.

A :class:`PlaneCorrespondence` is a polynomial ``h`` in source variables,
an optional cube parameter ``t`` and one target variable ``y``.  It is
finite flat over the source when the leading ``y``-coefficient is a unit
of the source coordinate ring.  When the target is a punctured line the
constant coefficient must be a unit as well.  Units of
``k[x_1^(+-1), ..., t]`` are nonzero constants times monomials in the
invertible source variables.

Since ``h`` is monic in ``y``, it determines its cycle.  Two boundaries
are therefore compared by exact equality of polynomials.  The
decomposition into irreducible components over ``k(sources)`` is
reported alongside, and each component carries an irreducibility
certificate.

Extra target coordinates (the second factor of a product target) are kept
as polynomials in the sources and ``y``, reduced modulo ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .exact.factor import factor_monic, is_irreducible
from .exact.parse import parse_polynomial
from .exact.poly import Polynomial
from .exact.resultant import resultant
from .exact.rings import PrimeField, RationalField, Ring


class CertificateError(ValueError):
    """The unit certificate of a correspondence fails."""

    def __init__(self, message, coefficient=None):
        super().__init__(message)
        self.coefficient = coefficient


# --- helpers on multivariate polynomials ------------------------------------------------

def reduce_mod_monic(g: Polynomial, h: Polynomial, var: str) -> Polynomial:
    """Remainder of ``g`` on division by ``h``, monic in ``var``."""
    hc = h.coefficients_in(var)
    m = len(hc) - 1
    i = g.var_index(var)
    R = g
    while R.degree(var) >= m and not R.is_zero():
        gc = R.coefficients_in(var)
        k = len(gc) - 1
        lead = gc[k]
        shift = tuple(k - m if j == i else 0 for j in range(g.nvars))
        R = R - (lead * h).shift(shift)
    return R


def _monomial_unit(c: Polynomial, invertible) -> bool:
    """Nonzero constant times a monomial in the invertible generators."""
    if len(c.terms) != 1:
        return False
    (e,) = c.terms
    return all(k == 0 or c.gens[i] in invertible for i, k in enumerate(e))


def _order_in(c: Polynomial, var: str):
    if c.is_zero():
        return None
    i = c.var_index(var)
    return min(e[i] for e in c.terms)


def irreducibility_certificate(h: Polynomial, var: str, field: Ring, sources):
    """A reason why monic ``h`` is irreducible over ``k(sources)``, or None.

    Tried in order: degree one; the Newton polygon at ``s = 0`` for a source
    ``s`` (one edge whose height is coprime to the degree); specialising all
    sources to small field elements and testing the univariate image.
    """
    r = h.degree(var)
    if r == 1:
        return "linear"
    coeffs = h.coefficients_in(var)
    for s in sources:
        v0 = _order_in(coeffs[0], s)
        if not v0 or gcd(v0, r) != 1:
            continue
        if all(c.is_zero() or _order_in(c, s) * r >= v0 * (r - i)
               for i, c in enumerate(coeffs)):
            return f"newton polygon at {s}=0"
    for c in range(1, 6):
        point = {s: field.from_int(c + j) for j, s in enumerate(sources)}
        g = h.subs(point).drop((var,))
        if g.degree() == r and is_irreducible(g):
            desc = ", ".join(f"{s}={field.format(v)}" for s, v in point.items())
            return f"specialisation {desc}"
    return None


def homogeneous_components(h: Polynomial, x: str, y: str, field: Ring):
    """Factor ``h`` homogeneous in ``(x, y)`` and monic in ``y`` through ``h(1, u)``."""
    d = h.degree(y)
    u = h.subs({x: 1}).drop((y,))
    out = []
    for g, m in factor_monic(u):
        k = g.degree()
        out.append((Polynomial(field, h.gens, {
            tuple(k - j if name == x else j if name == y else 0 for name in h.gens): c
            for (j,), c in g.terms.items()}), m))
    check = h.const_like(1)
    for g, m in out:
        check = check * g ** m
    if check != h or d != sum(g.degree(y) * m for g, m in out):
        raise ValueError("polynomial is not homogeneous of the expected shape")
    return out


# --- correspondences --------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneCorrespondence:
    """``h(sources, [param], target) = 0`` with side coordinates ``name = g``."""

    field: Ring
    sources: tuple
    target: str
    poly: Polynomial
    param: str = None
    invertible: frozenset = frozenset()
    target_invertible: bool = True
    side: tuple = ()

    @classmethod
    def parse(cls, field, sources, target, text, param=None, invertible=None,
              target_invertible=True, side=None):
        sources = tuple(sources)
        gens = cls.layout(sources, param, target)
        poly = parse_polynomial(text, field, gens)
        inv = frozenset(sources if invertible is None else invertible)
        side_polys = tuple((name, parse_polynomial(g, field, gens))
                           for name, g in (side or {}).items())
        return cls(field, sources, target, poly, param, inv, target_invertible, side_polys)

    @staticmethod
    def layout(sources, param, target):
        return tuple(sources) + ((param,) if param else ()) + (target,)

    @property
    def gens(self):
        return self.layout(self.sources, self.param, self.target)

    @property
    def degree(self):
        return self.poly.degree(self.target)

    def coefficient(self, k) -> Polynomial:
        coeffs = self.poly.coefficients_in(self.target)
        return coeffs[k] if k < len(coeffs) else self.poly.zero_like()

    def certify(self):
        """Raise :class:`CertificateError` unless finite flat with unit certificate."""
        if self.degree < 1:
            raise CertificateError("no target variable in the equation")
        lead = self.coefficient(self.degree)
        if not _monomial_unit(lead, self.invertible):
            raise CertificateError(f"leading coefficient {lead} is not a unit", str(lead))
        if self.target_invertible:
            const = self.coefficient(0)
            if not _monomial_unit(const, self.invertible):
                raise CertificateError(f"constant coefficient {const} is not a unit", str(const))
        return True

    def normalized(self):
        """Divide by the constant leading coefficient."""
        lead = self.coefficient(self.degree)
        if not lead.is_constant():
            return self
        inv = self.field.inv(lead.constant_term())
        return self._replace(poly=self.poly.scale(inv), side=self._reduced_side(self.poly))

    def _reduced_side(self, h):
        lead = h.coefficients_in(self.target)[-1]
        if not lead.is_constant():
            return self.side
        hm = h.scale(self.field.inv(lead.constant_term()))
        return tuple((name, reduce_mod_monic(g, hm, self.target)) for name, g in self.side)

    def _replace(self, **kw):
        data = dict(field=self.field, sources=self.sources, target=self.target, poly=self.poly,
                    param=self.param, invertible=self.invertible,
                    target_invertible=self.target_invertible, side=self.side)
        data.update(kw)
        return PlaneCorrespondence(**data)

    def to_json(self):
        return {"field": self.field.tag, "sources": list(self.sources), "param": self.param,
                "target": self.target, "invertible": sorted(self.invertible),
                "target_invertible": self.target_invertible, "poly": str(self.poly),
                "side": {name: str(g) for name, g in self.side}}

    @classmethod
    def from_json(cls, data):
        from .exact.parse import parse_ring
        return cls.parse(parse_ring(data["field"]), data["sources"], data["target"], data["poly"],
                         data.get("param"), data.get("invertible"),
                         data.get("target_invertible", True), data.get("side"))

    def __str__(self):
        extra = "".join(f", {name} = {g}" for name, g in self.side)
        return f"{{{self.poly} = 0{extra}}}"


def boundary(gamma: PlaneCorrespondence, eps) -> PlaneCorrespondence:
    """Restriction to ``t = eps``, normalised monic in the target."""
    if not gamma.param:
        raise ValueError("correspondence has no cube parameter")
    gamma.certify()
    keep = gamma.sources + (gamma.target,)
    h = gamma.poly.subs({gamma.param: eps}).drop(keep)
    side = tuple((name, g.subs({gamma.param: eps}).drop(keep)) for name, g in gamma.side)
    out = PlaneCorrespondence(gamma.field, gamma.sources, gamma.target, h, None,
                              gamma.invertible, gamma.target_invertible, side)
    if out.degree != gamma.degree:
        raise CertificateError(f"fibre at t={eps} loses degree in {gamma.target}")
    return out.normalized()


def compose(alpha: PlaneCorrespondence, beta: PlaneCorrespondence) -> PlaneCorrespondence:
    """``beta o alpha`` for ``alpha: sources -> y`` and ``beta: y -> z`` via ``Res_y``."""
    if beta.sources != (alpha.target,):
        raise ValueError(f"beta must have the single source {alpha.target!r}")
    if alpha.param or beta.param:
        raise ValueError("compose boundaries, not families")
    if beta.target in alpha.sources:
        raise ValueError("variable clash between source and target")
    try:
        alpha.certify()
    except CertificateError as exc:
        raise CertificateError(f"alpha is not certified: {exc}", exc.coefficient) from None
    y, z = alpha.target, beta.target
    gens = alpha.sources + (y, z)
    h = resultant(alpha.poly.embed(gens), beta.poly.embed(gens), y)
    out = PlaneCorrespondence(alpha.field, alpha.sources, z, h.embed(alpha.sources + (z,)), None,
                              alpha.invertible, beta.target_invertible)
    return out.normalized()


def apply_morphism(gamma: PlaneCorrespondence, images: dict, primary: str) -> PlaneCorrespondence:
    """Push the correspondence forward along a morphism of targets.

    ``images`` maps new coordinate names to polynomials in the old gens;
    the ``primary`` coordinate must be the old target itself, and the others
    become side coordinates reduced modulo ``h``.
    """
    old = gamma.target
    gens = gamma.gens
    if images[primary] != Polynomial.gen(gamma.field, gens, old):
        raise ValueError("the primary coordinate must equal the target variable")
    renamed = gamma.sources + (primary,)
    h = gamma.poly.rename(renamed)
    side = []
    for name, g in images.items():
        if name == primary:
            continue
        side.append((name, reduce_mod_monic(g.rename(renamed), h, primary)))
    return PlaneCorrespondence(gamma.field, gamma.sources, primary, h, None,
                               gamma.invertible, gamma.target_invertible, tuple(side))


def same_cycle(a: PlaneCorrespondence, b: PlaneCorrespondence) -> bool:
    """Equal monic equations and side coordinates congruent modulo the equation."""
    if a.gens != b.gens or a.poly != b.poly:
        return False
    sa, sb = dict(a.side), dict(b.side)
    if set(sa) != set(sb):
        return False
    return all(reduce_mod_monic(sa[k] - sb[k], a.poly, a.target).is_zero() for k in sa)


# --- expected cycles ---------------------------------------------------------------------

@dataclass
class ExpectedCycle:
    """Components with multiplicities, plus side coordinates."""

    components: list
    side: dict = dc_field(default_factory=dict)

    def product(self, gens, field):
        acc = Polynomial.constant(field, gens, 1)
        for g, m in self.components:
            acc = acc * g ** m
        return acc

    def describe(self):
        parts = [{"component": str(g), "mult": m} for g, m in self.components]
        return {"components": parts, "side": {k: str(v) for k, v in self.side.items()}}


def _expected(field, gens, items, side=None):
    comps = [(parse_polynomial(text, field, gens), m) for text, m in items]
    side = {k: parse_polynomial(v, field, gens) for k, v in (side or {}).items()}
    return ExpectedCycle(comps, side)


def matches(gamma: PlaneCorrespondence, expected: ExpectedCycle) -> bool:
    target = PlaneCorrespondence(gamma.field, gamma.sources, gamma.target,
                                 expected.product(gamma.gens, gamma.field), None,
                                 gamma.invertible, gamma.target_invertible,
                                 tuple(expected.side.items()))
    return same_cycle(gamma, target)


def describe_cycle(gamma: PlaneCorrespondence, expected: ExpectedCycle = None):
    """Components of ``gamma``: the expected split when it multiplies out, else the equation."""
    if expected is not None and matches(gamma, expected):
        comps = expected.components
    else:
        comps = [(gamma.poly, 1)]
    out = []
    for g, m in comps:
        cert = irreducibility_certificate(g, gamma.target, gamma.field, gamma.sources)
        out.append({"component": str(g), "mult": m, "irreducible": cert})
    side = {name: str(g) for name, g in gamma.side}
    return {"equation": str(gamma.poly), "components": out, "side": side}


# --- the corpus -----------------------------------------------------------------------------

@dataclass
class CorpusItem:
    """One family instance; ``build`` returns the two cycles to compare."""

    family: str
    params: dict
    claim: str
    kind: str
    build: object
    expected0: object
    expected1: object
    gamma: PlaneCorrespondence = None


FAMILIES = ("gm1", "gm2", "gm3", "gm4", "gm5", "dv", "fdv")
WITT_FAMILIES = ("xs_yr", "xys_zs", "xs_ys")


def _field_ok(field):
    if not isinstance(field, (PrimeField, RationalField)):
        raise ValueError(f"corpus fields are F_p or Q, got {field}")


def gm1(field, s):
    """``F_s`` is homotopic to ``s`` on the punctured line."""
    g = PlaneCorrespondence.parse(field, ("x",), "y",
                                  f"(1-t)*(y-x^{s})*(y-1)^{s - 1} + t*(y-x)^{s}", param="t")
    gens = ("x", "y")
    e0 = _expected(field, gens, [(f"y - x^{s}", 1)] + ([("y - 1", s - 1)] if s > 1 else []))
    e1 = _expected(field, gens, [("y - x", s)])
    return CorpusItem("gm1", {"s": s}, "F_s = s on G_m^+ up to homotopy", "homotopy",
                      None, e0, e1, g)


def gm2(field, s):
    """``V_s`` is homotopic to the identity (needs odd ``s``)."""
    g = PlaneCorrespondence.parse(field, ("x",), "y",
                                  f"(1-t)*(y^{s}-x) + t*(y-x)*(y-1)^{s - 1}", param="t")
    gens = ("x", "y")
    e0 = _expected(field, gens, [(f"y^{s} - x", 1)])
    e1 = _expected(field, gens, [("y - x", 1)] + ([("y - 1", s - 1)] if s > 1 else []))
    return CorpusItem("gm2", {"s": s}, "V_s = id on G_m^+ for odd s", "homotopy",
                      None, e0, e1, g)


def gm3(field):
    """``[a] + [b] = [ab]``."""
    g = PlaneCorrespondence.parse(field, ("a", "b"), "x",
                                  "(1-t)*(x-a)*(x-b) + t*(x-a*b)*(x-1)", param="t")
    gens = ("a", "b", "x")
    e0 = _expected(field, gens, [("x - a", 1), ("x - b", 1)])
    e1 = _expected(field, gens, [("x - a*b", 1), ("x - 1", 1)])
    return CorpusItem("gm3", {}, "[a] + [b] = [ab] in G_m^+", "homotopy", None, e0, e1, g)


_E1 = "(1-t)*(x+y) + t*(x*y+1)"


def gm4(field):
    """The swap on ``G_m^+ (x) G_m^+``: ``z + w = e_1(t)``, ``zw = xy``."""
    g = PlaneCorrespondence.parse(field, ("x", "y"), "z", f"z^2 - ({_E1})*z + x*y",
                                  param="t", side={"w": f"{_E1} - z"})
    gens = ("x", "y", "z")
    e0 = _expected(field, gens, [("z - x", 1), ("z - y", 1)], {"w": "x + y - z"})
    e1 = _expected(field, gens, [("z - x*y", 1), ("z - 1", 1)], {"w": "x*y + 1 - z"})
    return CorpusItem("gm4", {}, "id + tau = 0 on the tensor square", "homotopy",
                      None, e0, e1, g)


def gm5(field):
    """The swap homotopy restricted to the diagonal ``y = x``."""
    e1t = "(1-t)*(2*x) + t*(x^2+1)"
    g = PlaneCorrespondence.parse(field, ("x",), "z", f"z^2 - ({e1t})*z + x^2",
                                  param="t", side={"w": f"{e1t} - z"})
    gens = ("x", "z")
    e0 = _expected(field, gens, [("z - x", 2)], {"w": "2*x - z"})
    e1 = _expected(field, gens, [("z - x^2", 1), ("z - 1", 1)], {"w": "x^2 + 1 - z"})
    return CorpusItem("gm5", {}, "2 delta = 0 through the diagonal", "homotopy",
                      None, e0, e1, g)


def _rho(field, source, target, s):
    """Graph of ``x -> x^s``."""
    return PlaneCorrespondence.parse(field, (source,), target, f"{target} - {source}^{s}")


def _rho_t(field, source, target, s):
    """Transpose of the graph: ``target^s = source``."""
    return PlaneCorrespondence.parse(field, (source,), target, f"{target}^{s} - {source}")


def dv(field, ell):
    """Both routes of the d / V_l F_l square give ``x^l = y^l = z``."""
    vf = compose(_rho(field, "x", "w", ell), _rho_t(field, "w", "y", ell))

    def build():
        gens = ("x", "y")
        x = Polynomial.gen(field, gens, "x")
        y = Polynomial.gen(field, gens, "y")
        # diagonal, then id x rho_l, then (V_l F_l) x id on the first factor
        route_a = apply_morphism(vf, {"y": y, "z": x ** ell}, "y")
        # V_l F_l, then the diagonal, then id x rho_l
        route_b = apply_morphism(vf, {"y": y, "z": y ** ell}, "y")
        return route_a, route_b

    gens = ("x", "y")
    h = parse_polynomial(f"y^{ell} - x^{ell}", field, gens)
    comps = homogeneous_components(h, "x", "y", field)
    side = {"z": parse_polynomial(f"x^{ell}", field, gens)}
    e = ExpectedCycle(comps, side)
    return CorpusItem("dv", {"ell": ell}, "x^l = y^l = z", "diagram", build, e, e)


def fdv(field, p):
    """Both routes of the F d V square give ``x = y = z^p``."""
    def build():
        gens = ("x", "z")
        z = Polynomial.gen(field, gens, "z")
        x = Polynomial.gen(field, gens, "x")
        # transpose of rho_p, diagonal, then F_p on the first factor
        route_a = apply_morphism(_rho_t(field, "x", "z", p), {"z": z, "y": z ** p}, "z")
        # diagonal, then id x transpose of rho_p
        route_b = apply_morphism(_rho_t(field, "x", "z", p), {"z": z, "y": x}, "z")
        return route_a, route_b

    gens = ("x", "z")
    e = _expected(field, gens, [(f"z^{p} - x", 1)], {"y": "x"})
    return CorpusItem("fdv", {"p": p}, "x = y = z^p", "diagram", build, e, e)


def xs_yr(field, s, r):
    """``F_s V_r = V_r F_s`` for coprime ``s, r``: both are ``x^s = y^r``."""
    def build():
        a = compose(_rho(field, "x", "w", s), _rho_t(field, "w", "y", r))
        b = compose(_rho_t(field, "x", "w", r), _rho(field, "w", "y", s))
        return a, b

    e = _expected(field, ("x", "y"), [(f"y^{r} - x^{s}", 1)])
    return CorpusItem("xs_yr", {"s": s, "r": r}, "x^s = y^r", "diagram", build, e, e)


def xys_zs(field, s):
    """Both sides of ``V_s(u * F_s v) = V_s u * v`` are ``x y^s = z^s``."""
    def build():
        gens = ("x", "y", "z")
        # (x, y) -> x*y^s, then the transpose of rho_s
        a = PlaneCorrespondence.parse(field, ("x", "y"), "z", f"z^{s} - x*y^{s}")
        # transpose of rho_s on x, then multiply by y
        big = ("x", "y", "w", "z")
        g = resultant(parse_polynomial(f"w^{s} - x", field, big),
                      parse_polynomial("z - w*y", field, big), "w")
        b = PlaneCorrespondence(field, ("x", "y"), "z", g.embed(gens)).normalized()
        return a, b

    e = _expected(field, ("x", "y", "z"), [(f"z^{s} - x*y^{s}", 1)])
    return CorpusItem("xys_zs", {"s": s}, "x y^s = z^s", "diagram", build, e, e)


def xs_ys(field, s):
    """``V_s F_s`` is the symmetric cycle ``x^s = y^s``; compared with its transpose."""
    def build():
        a = compose(_rho(field, "x", "w", s), _rho_t(field, "w", "y", s))
        swapped = a.poly.subs({"x": Polynomial.gen(field, ("x", "y"), "y"),
                               "y": Polynomial.gen(field, ("x", "y"), "x")})
        b = a._replace(poly=swapped).normalized()
        return a, b

    h = parse_polynomial(f"y^{s} - x^{s}", field, ("x", "y"))
    e = ExpectedCycle(homogeneous_components(h, "x", "y", field))
    return CorpusItem("xs_ys", {"s": s}, "x^s = y^s is symmetric", "diagram", build, e, e)


def builtin_corpus(field, max_s=4, ells=(2, 3), primes=(3, 5)):
    """Every family instance in range; even ``s`` for ``gm2`` is left out
    (see :func:`rejected_instances`)."""
    _field_ok(field)
    items = [gm1(field, s) for s in range(1, max_s + 1)]
    items += [gm2(field, s) for s in range(1, max_s + 1, 2)]
    items += [gm3(field), gm4(field), gm5(field)]
    items += [dv(field, ell) for ell in ells]
    items += [fdv(field, p) for p in primes]
    return items


def rejected_instances(field, max_s=4):
    """Instances whose unit certificate must fail."""
    _field_ok(field)
    return [gm2(field, s) for s in range(2, max_s + 1, 2)]


def witt_property_cycles(field, max_s=4):
    _field_ok(field)
    items = [xs_yr(field, s, r) for s in range(1, max_s + 1) for r in range(1, max_s + 1)
             if gcd(s, r) == 1]
    items += [xys_zs(field, s) for s in range(1, max_s + 1)]
    items += [xs_ys(field, s) for s in range(1, max_s + 1)]
    return items


def make_item(family, field, **params):
    makers = {"gm1": lambda: gm1(field, params["s"]), "gm2": lambda: gm2(field, params["s"]),
              "gm3": lambda: gm3(field), "gm4": lambda: gm4(field), "gm5": lambda: gm5(field),
              "dv": lambda: dv(field, params.get("ell", params.get("s", 2))),
              "fdv": lambda: fdv(field, params.get("p", params.get("s", 3))),
              "xs_yr": lambda: xs_yr(field, params["s"], params["r"]),
              "xys_zs": lambda: xys_zs(field, params["s"]),
              "xs_ys": lambda: xs_ys(field, params["s"])}
    if family not in makers:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(makers)}")
    try:
        return makers[family]()
    except KeyError as exc:
        raise ValueError(f"family {family} needs parameter {exc.args[0]}") from None


def verify_homotopy(item: CorpusItem):
    """Report ``{family, params, boundary0, boundary1, expected0, expected1, pass}``."""
    report = {"family": item.family, "params": dict(item.params), "claim": item.claim,
              "field": None, "kind": item.kind}
    try:
        if item.kind == "homotopy":
            report["field"] = item.gamma.field.tag
            b0, b1 = boundary(item.gamma, 0), boundary(item.gamma, 1)
        else:
            b0, b1 = item.build()
            report["field"] = b0.field.tag
    except CertificateError as exc:
        report.update({"boundary0": None, "boundary1": None,
                       "expected0": item.expected0.describe(),
                       "expected1": item.expected1.describe(),
                       "pass": False, "error": str(exc), "offending": exc.coefficient})
        return report
    ok0, ok1 = matches(b0, item.expected0), matches(b1, item.expected1)
    report.update({"boundary0": describe_cycle(b0, item.expected0),
                   "boundary1": describe_cycle(b1, item.expected1),
                   "expected0": item.expected0.describe(),
                   "expected1": item.expected1.describe(),
                   "pass": ok0 and ok1})
    return report
