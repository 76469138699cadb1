from fractions import Fraction

import pytest
import sympy
from sympy.polys.ring_series import rs_exp, rs_log
from hypothesis import given
from hypothesis import strategies as st

from wittkit.exact import GF, QQ, ZZ, Zmod
from wittkit.witt import universal
from wittkit.witt.big import (BigWittVector, GhostVector, HatWittVector, frobenius, ghost,
                              hat_frobenius, hat_star, hat_verschiebung, teichmuller, unghost, unit,
                              verschiebung, vf_descend, witt_add, witt_coordinates,
                              from_witt_coordinates, witt_mul_int, witt_neg, witt_star)

T = sympy.symbols("t")
QT, TT = sympy.polys.rings.ring("t", sympy.QQ)


def ghost_oracle(coeffs):
    """-t d/dt log u(t), expanded with sympy's ring series."""
    n = len(coeffs)
    u = 1 + sum(sympy.Rational(c) * TT ** (k + 1) for k, c in enumerate(coeffs))
    log = rs_log(u, TT, n + 1)
    expr = -TT * log.diff(TT)
    return [sympy.Rational(expr.coeff(TT ** k)) for k in range(1, n + 1)]


def unghost_oracle(ghosts):
    """exp(-sum g_k t^k / k), expanded with sympy's ring series."""
    n = len(ghosts)
    expo = -sum(sympy.Rational(g) * TT ** k / k for k, g in enumerate(ghosts, start=1))
    expr = rs_exp(expo, TT, n + 1)
    return [sympy.Rational(expr.coeff(TT ** k)) for k in range(1, n + 1)]


small = st.integers(-4, 4)


def vectors(n):
    return st.lists(small, min_size=n, max_size=n)


# --- group law -------------------------------------------------------------------------------

def test_addition_examples():
    a, b = 2, 5
    assert witt_add(teichmuller(a, 2, ZZ), teichmuller(b, 2, ZZ)).coeffs == (-(a + b), a * b)
    u = BigWittVector(ZZ, [3, 4])
    assert witt_add(u, BigWittVector.identity(ZZ, 2)) == u
    assert witt_add(unit(ZZ, 2), unit(ZZ, 2)).coeffs == (-2, 1)


def test_negation_examples():
    assert witt_neg(BigWittVector(ZZ, [-2, 0])).coeffs == (2, 4)
    assert witt_neg(BigWittVector.identity(ZZ, 3)).is_identity()
    assert witt_neg(teichmuller(3, 3, ZZ)).coeffs == (3, 9, 27)


def test_teichmuller_examples():
    assert teichmuller(0, 3, ZZ).is_identity()
    assert teichmuller(1, 1, ZZ).coeffs == (-1,)
    assert teichmuller(5, 3, ZZ).coeffs == (-5, 0, 0)


# --- ghost map -------------------------------------------------------------------------------

def test_ghost_examples():
    assert ghost(teichmuller(3, 4, ZZ)).entries == (3, 9, 27, 81)
    assert ghost(BigWittVector.identity(ZZ, 3)).entries == (0, 0, 0)
    assert ghost(witt_add(unit(ZZ, 4), unit(ZZ, 4))).entries == (2, 2, 2, 2)
    assert unghost(GhostVector(QQ, [QQ.from_int(a) for a in (2, 4, 8)])) == teichmuller(2, 3, QQ)
    assert unghost(GhostVector(QQ, [0, 0, 0])).is_identity()


def test_unghost_roundtrip_example():
    g = GhostVector(QQ, [QQ.from_int(x) for x in (1, 3, 4)])
    u = unghost(g)
    assert ghost(u) == g
    assert list(u.coeffs) == [Fraction(c) for c in unghost_oracle([1, 3, 4])]


@given(vectors(5))
def test_ghost_matches_log_derivative(coeffs):
    assert list(ghost(BigWittVector(ZZ, coeffs)).entries) == ghost_oracle(coeffs)


@given(vectors(4), vectors(4))
def test_ghost_is_additive(a, b):
    u, v = BigWittVector(ZZ, a), BigWittVector(ZZ, b)
    assert ghost(witt_add(u, v)) == ghost(u) + ghost(v)


# --- star product -------------------------------------------------------------------------------

def test_star_examples():
    assert witt_star(teichmuller(2, 3, ZZ), teichmuller(3, 3, ZZ)) == teichmuller(6, 3, ZZ)
    assert witt_star(BigWittVector(ZZ, [1, 0]), BigWittVector(ZZ, [1, 0])).coeffs == (-1, 0)


def test_star_general_n2_formula():
    a1, a2, b1, b2 = sympy.symbols("a1 a2 b1 b2")
    ga, gb = ghost_oracle_symbolic([a1, a2]), ghost_oracle_symbolic([b1, b2])
    prod = unghost_symbolic([x * y for x, y in zip(ga, gb)])
    assert sympy.expand(prod[0] + a1 * b1) == 0
    assert sympy.expand(prod[1] - (a1 ** 2 * b2 + a2 * b1 ** 2 - 2 * a2 * b2)) == 0
    table = universal.star_table(2)
    for vals in [(1, 2, 3, 4), (-1, 5, 2, -3), (0, 1, 7, 0)]:
        got = table.evaluate(ZZ, vals)
        expected = [int(e.subs(dict(zip((a1, a2, b1, b2), vals)))) for e in prod]
        assert list(got) == expected


def ghost_oracle_symbolic(coeffs):
    g = []
    for k in range(1, len(coeffs) + 1):
        acc = -k * coeffs[k - 1]
        for i in range(1, k):
            acc -= g[i - 1] * coeffs[k - i - 1]
        g.append(sympy.expand(acc))
    return g


def unghost_symbolic(ghosts):
    a = []
    for k in range(1, len(ghosts) + 1):
        acc = ghosts[k - 1]
        for i in range(1, k):
            acc += ghosts[i - 1] * a[k - i - 1]
        a.append(sympy.expand(-acc / k))
    return a


@given(vectors(4), vectors(4))
def test_star_matches_ghost_oracle(a, b):
    ours = witt_star(BigWittVector(ZZ, a), BigWittVector(ZZ, b))
    expected = unghost_oracle([x * y for x, y in zip(ghost_oracle(a), ghost_oracle(b))])
    assert list(ours.coeffs) == expected


@pytest.mark.parametrize("R", [ZZ, Zmod(12), GF(7)], ids=lambda R: R.tag)
def test_star_engines_agree(R):
    @given(vectors(6), vectors(6))
    def check(a, b):
        u, v = BigWittVector(R, a), BigWittVector(R, b)
        assert witt_star(u, v, engine="table") == witt_star(u, v, engine="coordinates")
    check()


def test_tables_have_integer_coefficients():
    report = universal.build_all_tables(max_n=4, max_s=3)
    assert report


# --- Frobenius and Verschiebung -------------------------------------------------------------------

def test_frobenius_examples():
    for a in (2, -3, 5):
        assert frobenius(2, teichmuller(a, 4, ZZ)) == teichmuller(a * a, 2, ZZ)
    u = BigWittVector(ZZ, [3, 1, 4])
    assert frobenius(1, u) == u
    # F_2 of 1 - t^2 = [1] + [-1] is [1] + [1]
    assert frobenius(2, BigWittVector(ZZ, [0, -1, 0, 0])).coeffs == (-2, 1)


@given(vectors(6), st.sampled_from([1, 2, 3]))
def test_frobenius_ghost_property(coeffs, s):
    u = BigWittVector(ZZ, coeffs)
    m = 6 // s
    gu, gf = ghost(u).entries, ghost(frobenius(s, u.truncate(s * m))).entries
    assert all(gf[k - 1] == gu[s * k - 1] for k in range(1, m + 1))


@pytest.mark.parametrize("R", [ZZ, GF(7)], ids=lambda R: R.tag)
def test_frobenius_engines_agree(R):
    @given(vectors(6), st.sampled_from([2, 3]))
    def check(coeffs, s):
        u = BigWittVector(R, coeffs[: s * (6 // s)])
        assert frobenius(s, u, engine="table") == frobenius(s, u, engine="coordinates")
    check()


def test_verschiebung_examples():
    assert verschiebung(2, teichmuller(7, 2, ZZ)).coeffs == (0, -7, 0, 0)
    u = BigWittVector(ZZ, [1, 2])
    assert verschiebung(1, u) == u
    a = 4
    assert frobenius(2, verschiebung(2, teichmuller(a, 3, ZZ))) == witt_add(teichmuller(a, 3, ZZ),
                                                                           teichmuller(a, 3, ZZ))


@given(vectors(3), st.integers(1, 4))
def test_fv_is_multiplication(coeffs, s):
    u = BigWittVector(ZZ, coeffs)
    assert frobenius(s, verschiebung(s, u)) == witt_mul_int(u, s)


def test_vf_descend_examples():
    a = 3
    u = teichmuller(a, 2, ZZ)
    full = verschiebung(2, frobenius(2, teichmuller(a, 4, ZZ)))
    assert vf_descend(2, 2, u) == full.truncate(2)
    assert vf_descend(2, 2, u).coeffs == (0, -a * a)
    assert vf_descend(1, 2, u) == u
    assert vf_descend(2, 0, BigWittVector(ZZ, [])).n == 0


@given(vectors(5))
def test_witt_coordinates_roundtrip(coeffs):
    u = BigWittVector(ZZ, coeffs)
    assert from_witt_coordinates(ZZ, witt_coordinates(u)) == u


# --- hat vectors ---------------------------------------------------------------------------------

def test_hat_examples():
    F = GF(7)
    a, b = F.from_int(2), F.from_int(3)
    ta, tb = HatWittVector.teichmuller(F, a, 3), HatWittVector.teichmuller(F, b, 3)
    assert hat_star(ta, tb) == HatWittVector.teichmuller(F, F.mul(a, b), 3)
    f2 = hat_frobenius(2, HatWittVector.teichmuller(F, a, 4))
    assert f2 == HatWittVector(teichmuller(F.mul(a, a), 2, F), F.mul(a, a), 1)
    v3 = hat_verschiebung(3, HatWittVector.teichmuller(F, a, 1))
    assert v3.witt.coeffs == (0, 0, F.neg(a)) and v3.unit == a and v3.degree == 3


def test_hat_verschiebung_conventions():
    F = GF(7)
    a = F.from_int(2)
    x = HatWittVector.teichmuller(F, a, 1)
    assert hat_verschiebung(2, x, "literal").unit == a
    assert hat_verschiebung(2, x, "cycle").unit == F.neg(a)
    with pytest.raises(ValueError):
        hat_verschiebung(2, x, "other")


def test_json_roundtrip():
    u = BigWittVector(Zmod(12), [5, 7, 11])
    assert BigWittVector.from_json(u.to_json()) == u
    x = HatWittVector.teichmuller(GF(5), 3, 2)
    assert HatWittVector.from_json(x.to_json()) == x
