import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittkit.exact import GF, QQ
from wittkit.modulus import (QDivisorP1, RationalFunctionP1, ZeroCycle, chow_reduce, cycle_frobenius,
                             cycle_star, cycle_verschiebung, divisor_of, graph_boundary_check,
                             hasse_arf_check, is_admissible, modulus_divisor, parse_cycle, phi,
                             phi_hat, poly_x, random_admissible, random_cycle, unit_cycle)
from wittkit.witt.big import (BigWittVector, HatWittVector, frobenius, hat_frobenius, hat_star,
                              hat_verschiebung, teichmuller, verschiebung, witt_add, witt_star)

F5, F7 = GF(5), GF(7)


def cyc(text, F):
    return parse_cycle(text, F)


# --- admissibility and divisors ------------------------------------------------------------------

def test_admissibility_examples():
    D2 = QDivisorP1.at_infinity(QQ, 2)
    assert is_admissible(RationalFunctionP1.parse("(x^2+1)/(x^2)", QQ), D2)
    assert not is_admissible(RationalFunctionP1.parse("x", QQ), QDivisorP1.at_infinity(QQ, 1))
    for r in (Fraction(1, 2), 1, 3):
        assert is_admissible(RationalFunctionP1.parse("1", QQ), QDivisorP1.at_infinity(QQ, r))


def test_divisor_examples():
    d = divisor_of(RationalFunctionP1.parse("(x^2-1)/(x^2-4)", QQ))
    assert d == cyc("[x-1] + [x+1] - [x-2] - [x+2]", QQ)
    assert divisor_of(RationalFunctionP1.parse("1", QQ)) == ZeroCycle.empty(QQ)
    assert divisor_of(RationalFunctionP1.parse("x^2+1", F5)) == cyc("[x+2] + [x+3]", F5)


# --- phi and phi_hat ------------------------------------------------------------------------------

def test_phi_examples():
    for a in (2, 3, 6):
        assert phi(cyc(f"[x-{a}]", F7), 3) == teichmuller(a, 3, F7)
    assert phi(cyc("[x^2+1]", F7), 2).coeffs == (0, 1)
    assert phi_hat(cyc("[x^2+1]", F7), 2) == HatWittVector(BigWittVector(F7, [0, 1]), 1, 2)
    assert phi(cyc("[x-2] + [x-3]", QQ), 2).coeffs == (-5, 6)


def test_cycle_frobenius_examples():
    assert cycle_frobenius(2, cyc("[x-3]", QQ)) == cyc("[x-9]", QQ)
    assert cycle_frobenius(2, cyc("[x^2+1]", F7)) == cyc("2[x+1]", F7)
    c = cyc("[x^2+1] - [x-3]", F7)
    assert cycle_frobenius(1, c) == c


def test_cycle_verschiebung_examples():
    assert cycle_verschiebung(2, cyc("[x-5]", QQ)) == divisor_of(RationalFunctionP1.parse("x^2-5", QQ))
    assert cycle_verschiebung(2, cyc("[x-4]", F7)) == cyc("[x-2] + [x-5]", F7)
    c = cyc("[x^2+1]", F7)
    assert cycle_verschiebung(1, c) == c


def test_cycle_star_examples():
    assert cycle_star(cyc("[x-2]", QQ), cyc("[x-3]", QQ)) == cyc("[x-6]", QQ)
    c = cyc("[x^2+1] - 2[x-3]", F7)
    assert cycle_star(unit_cycle(F7), c) == c
    assert cycle_star(cyc("[x^2+1]", F7), cyc("[x^2+1]", F7)) == cyc("2[x+1] + 2[x-1]", F7)


FIELDS = [GF(3), GF(5), GF(7)]


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.tag)
def test_phi_intertwines_operations(F):
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4), st.integers(1, 4))
    def check(seed, n, s):
        rng = random.Random(seed)
        a, b = random_cycle(F, rng), random_cycle(F, rng)
        assert phi(a + b, n) == witt_add(phi(a, n), phi(b, n))
        assert phi(cycle_star(a, b), n) == witt_star(phi(a, n), phi(b, n))
        assert phi(cycle_frobenius(s, a), n) == frobenius(s, phi(a, s * n))
        assert phi(cycle_verschiebung(s, a), s * n) == verschiebung(s, phi(a, n))
    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.tag)
def test_phi_hat_intertwines_operations(F):
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 3), st.integers(1, 4))
    def check(seed, n, s):
        rng = random.Random(seed)
        a, b = random_cycle(F, rng, avoid_origin=True), random_cycle(F, rng, avoid_origin=True)
        assert phi_hat(cycle_star(a, b), n) == hat_star(phi_hat(a, n), phi_hat(b, n))
        assert phi_hat(cycle_frobenius(s, a), n) == hat_frobenius(s, phi_hat(a, s * n))
        assert phi_hat(cycle_verschiebung(s, a), s * n) == hat_verschiebung(s, phi_hat(a, n))
    check()


def test_hat_verschiebung_literal_convention_differs_on_cycles():
    # V_2 of [x-2] over F7 is div(x^2-2); its unit is -2, not 2
    c = cyc("[x-2]", F7)
    lhs = phi_hat(cycle_verschiebung(2, c), 2)
    assert lhs == hat_verschiebung(2, phi_hat(c, 1), "cycle")
    assert lhs != hat_verschiebung(2, phi_hat(c, 1), "literal")


# --- Chow groups ---------------------------------------------------------------------------------

def test_chow_reduce_examples():
    D = modulus_divisor(F5, Fraction(3, 2))
    w, deg = chow_reduce(divisor_of(RationalFunctionP1.parse("(x^2+1)/(x^2)", F5)), D)
    assert w.is_identity() and deg == 0
    for n in (1, 2, 3):
        w, deg = chow_reduce(cyc("[x-3]", F7), modulus_divisor(F7, n + Fraction(1, 2)))
        assert w == teichmuller(3, n, F7) and deg == 1
    w, deg = chow_reduce(ZeroCycle.empty(F7), modulus_divisor(F7, 2))
    assert w.is_identity() and deg == 0


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.tag)
def test_principal_divisors_vanish(F):
    @given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4), st.booleans())
    def check(seed, n, hat):
        rng = random.Random(seed)
        f = random_admissible(F, n, rng, hat=hat)
        D = modulus_divisor(F, n + Fraction(1, 2), Fraction(1, 2) if hat else None)
        assert is_admissible(f, D)
        w, deg = chow_reduce(divisor_of(f), D)
        assert deg == 0
        if hat:
            assert w.witt.is_identity() and F.is_one(w.unit)
        else:
            assert w.is_identity()
    check()


# --- Hasse-Arf -----------------------------------------------------------------------------------

def test_hasse_arf_examples():
    f = RationalFunctionP1.parse("1 + 1/x^2", QQ)
    for r in (Fraction(3, 2), Fraction(2)):
        assert is_admissible(f, QDivisorP1.at_infinity(QQ, r))
    g = RationalFunctionP1.parse("1 + 1/x", QQ)
    assert is_admissible(g, QDivisorP1.at_infinity(QQ, Fraction(1, 2)))
    assert is_admissible(g, QDivisorP1.at_infinity(QQ, 1))


@pytest.mark.parametrize("r", [Fraction(1, 2), Fraction(3, 2), Fraction(7, 3), Fraction(9, 5), 2])
def test_hasse_arf_check(r):
    rep = hasse_arf_check(r, 60, seed=3)
    assert rep.passed and rep.agreements == 60
    assert rep.admissible_counts[0] == rep.admissible_counts[1]


# --- graphs of rational maps ---------------------------------------------------------------------

GRAPHS = [("x^2+3*x+1", "x^2+5"), ("x+2", "x+3"), ("x^2", "x^2+1"), ("x^3+x", "x^3+2"),
          ("x^2+x+1", "x^2+4*x"), ("x^3", "x^3+x^2+1"), ("x+6", "x"), ("x^2+2", "x^2+3*x+3"),
          ("x^4+1", "x^4+x"), ("x^3+5*x+5", "x^3+2*x^2")]


@pytest.mark.parametrize("A, B", GRAPHS)
def test_graph_boundary_matches_pushed_divisor(A, B):
    assert graph_boundary_check(poly_x(F7, A), poly_x(F7, B)).passed


def test_cycle_json_roundtrip():
    c = cyc("[x^2+1] - 2[x-3]", F7)
    assert ZeroCycle.from_json(F7, c.to_json()) == c
