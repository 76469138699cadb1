import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittkit.exact import GF, FiniteFreeAlgebra, NotInvertible, parse_ring, product_algebra
from wittkit.suites import random_free_algebra, random_unimodular, random_unit
from wittkit.transfers import (FullTensor, SymTensor, SymmetryError, base_change_algebra, norm_oracle,
                               orbit_basis, point_decomposition, trace_oracle, transfer, transfer_cycle,
                               transfer_Ga, transfer_Gm, transfer_hat, transfer_ptypical_native,
                               transfer_ptypical_projected, transfer_Witt, u_map, u_on_orbit,
                               witt_norm_oracle)
from wittkit.witt.big import BigWittVector, HatWittVector, witt_add, witt_mul_int
from wittkit.witt.ptypical import PTypicalWitt

BASES = ["F5", "Z/9", "F3[y]/(y^2)"]
seeds = st.integers(0, 2 ** 32 - 1)


# --- symmetric tensors and the u-map -------------------------------------------------------------

def test_orbit_basis_examples():
    assert orbit_basis(1) == [(1,)]
    assert orbit_basis(2) == [(1, 1), (1, 2), (2, 2)]
    for d in range(1, 6):
        assert len(orbit_basis(d)) == comb(2 * d - 1, d)


def test_u_on_split_algebra():
    A2 = product_algebra([GF(5), GF(5)])
    assert [u_on_orbit(A2, o) for o in orbit_basis(2)] == [0, 1, 0]


def test_u_on_dual_numbers_with_basis_x_1():
    k = GF(5)
    B = FiniteFreeAlgebra(k, ["x", "1"], [[[0, 0], [1, 0]], [[1, 0], [0, 1]]], [0, 1])
    assert [u_on_orbit(B, o) for o in orbit_basis(2)] == [0, 0, 1]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_u_of_unit_is_one(d):
    B = parse_ring(f"F5[x]/(x^{d}+x+1)") if d > 1 else parse_ring("F5[x]/(x+1)")
    assert u_map(FullTensor.pure(B, [B.one] * d)) == 1


def test_non_symmetric_tensor_is_rejected():
    B = parse_ring("F5[x]/(x^2-2)")
    X = FullTensor.pure(B, [B.parse_element("x"), B.one])
    with pytest.raises(SymmetryError):
        SymTensor.from_full(X)


@pytest.mark.parametrize("tag", BASES)
def test_u_is_basis_independent(tag):
    A = parse_ring(tag)

    @given(seeds, st.integers(1, 3))
    def check(seed, d):
        rng = random.Random(seed)
        B = random_free_algebra(A, d, rng)
        g = B.random(rng, 5)
        P = random_unimodular(A, d, rng)
        B2, to_new = B.change_basis(P)
        assert u_map(FullTensor.pure(B, [g] * d)) == u_map(FullTensor.pure(B2, [to_new(g)] * d))
        X = FullTensor.slot(B, g, 0)
        X2 = FullTensor.slot(B2, to_new(g), 0)
        for i in range(1, d):
            X, X2 = X + FullTensor.slot(B, g, i), X2 + FullTensor.slot(B2, to_new(g), i)
        assert u_map(X) == u_map(X2)
    check()


# --- transfers against oracles --------------------------------------------------------------------

def test_ga_examples():
    B = parse_ring("F7[x]/(x^2-3)")
    assert transfer_Ga(B, B.parse_element("x")) == 0
    for d in (1, 2, 3, 4):
        Bd = parse_ring(f"Z/9[x]/(x^{d}+2)")
        assert transfer_Ga(Bd, Bd.one) == d
    k = parse_ring("F7[x]/(x^2)")
    g = k.parse_element("3 + 5*x")
    assert transfer_Ga(k, g) == 6


def test_gm_examples():
    B = parse_ring("F7[x]/(x^2-3)")
    assert transfer_Gm(B, B.parse_element("x")) == GF(7).neg(3)
    assert transfer_Gm(B, B.one) == 1
    P = product_algebra([GF(5), GF(5)])
    assert transfer_Gm(P, P.parse_element("(2, 3)")) == 1
    assert transfer_Gm(parse_ring("F5[x]/(x^2-2)"), parse_ring("F5[x]/(x^2-2)").parse_element("x")) == 3
    with pytest.raises(NotInvertible):
        transfer_Gm(P, P.parse_element("(0, 3)"))


def test_witt_examples():
    B = parse_ring("F7[x]/(x^2-3)")
    w = BigWittVector.teichmuller(B, B.parse_element("x"), 2)
    assert transfer_Witt(B, w).coeffs == (0, GF(7).neg(3))
    assert transfer_Witt(B, BigWittVector.identity(B, 3)).is_identity()
    k = parse_ring("F7[x]/(x^2)")
    w = BigWittVector(k, [k.parse_element("2 + x"), k.parse_element("3*x"), k.parse_element("5")])
    at0 = BigWittVector(GF(7), [2, 0, 5])
    assert transfer_Witt(k, w) == witt_add(at0, at0)


def test_hat_transfer_components():
    B = parse_ring("F5[x]/(x^2-2)")
    x = HatWittVector.teichmuller(B, B.parse_element("x"), 2)
    out = transfer_hat(B, x)
    assert out.degree == 2 and out.unit == 3 and out.witt == transfer_Witt(B, x.witt)


@pytest.mark.parametrize("tag", BASES)
def test_transfers_match_oracles(tag):
    A = parse_ring(tag)

    @given(seeds, st.integers(1, 4), st.integers(1, 4))
    def check(seed, d, n):
        rng = random.Random(seed)
        B = random_free_algebra(A, d, rng)
        g, h = B.random(rng, 5), random_unit(B, rng)
        w = BigWittVector(B, [B.random(rng, 5) for _ in range(n)])
        assert transfer_Ga(B, g) == trace_oracle(B, g)
        assert transfer_Gm(B, h) == norm_oracle(B, h)
        assert transfer_Witt(B, w) == witt_norm_oracle(B, w)
    check()


@pytest.mark.parametrize("tag", BASES)
def test_transfers_are_homomorphisms(tag):
    A = parse_ring(tag)

    @given(seeds, st.integers(1, 3))
    def check(seed, d):
        rng = random.Random(seed)
        B = random_free_algebra(A, d, rng)
        g1, g2 = B.random(rng, 5), B.random(rng, 5)
        assert transfer_Ga(B, B.add(g1, g2)) == A.add(transfer_Ga(B, g1), transfer_Ga(B, g2))
        u = BigWittVector(B, [B.random(rng, 5) for _ in range(3)])
        v = BigWittVector(B, [B.random(rng, 5) for _ in range(3)])
        assert transfer_Witt(B, witt_add(u, v)) == witt_add(transfer_Witt(B, u), transfer_Witt(B, v))
    check()


# --- reduction, points and base change -----------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("tag", ["F3", "F5"])
def test_local_algebra_collapses_to_d_times_evaluation(tag, d):
    B = parse_ring(f"{tag}[x]/(x^{d})")
    rng = random.Random(d)
    for _ in range(5):
        g = random_unit(B, rng)
        w = BigWittVector(B, [B.random(rng, 5) for _ in range(3)])
        for group, elem in (("Ga", g), ("Gm", g), ("W", w)):
            assert transfer(group, B, elem) == point_decomposition(group, B, elem, [(0, d)])


def test_split_points_over_a_field():
    B = parse_ring("F5[x]/(x^3-x^2)")
    g = B.parse_element("x^2+3*x+2")
    assert transfer_Ga(B, g) == GF(5).from_int(2 * 2 + 6)
    assert transfer_Gm(B, g) == GF(5).from_int(2 * 2 * 6)
    w = BigWittVector(B, [g, B.parse_element("x"), B.one])
    assert transfer("W", B, w) == point_decomposition("W", B, w, [(0, 2), (1, 1)])
    pw = PTypicalWitt(B, 5, [g, B.parse_element("x+1")])
    assert transfer("Wp", B, pw) == point_decomposition("Wp", B, pw, [(0, 2), (1, 1)])


def test_transfer_cycle_of_identity_algebra():
    A = GF(7)
    B = parse_ring("F7[x]/(x-1)")
    g = B.parse_element("4")
    assert transfer_cycle("Ga", [(3, B, g)], A) == 5
    assert transfer_cycle("Gm", [(3, B, g)], A) == 1
    w = BigWittVector(B, [B.parse_element("2"), B.parse_element("3")])
    assert transfer_cycle("W", [(3, B, w)], A, n=2) == witt_mul_int(BigWittVector(A, [2, 3]), 3)


@pytest.mark.parametrize("tag, red", [
    ("Z/9", lambda c: GF(3).convert(int(c))),
    ("F3[y]/(y^2)", lambda c: GF(3).convert(int(c[0]))),
])
def test_base_change_to_residue_field(tag, red):
    A, F3 = parse_ring(tag), GF(3)

    @given(seeds, st.integers(1, 4))
    def check(seed, d):
        rng = random.Random(seed)
        B = random_free_algebra(A, d, rng)
        Bk = base_change_algebra(B, F3, red)
        g, h = B.random(rng, 5), random_unit(B, rng)
        assert red(transfer_Ga(B, g)) == transfer_Ga(Bk, tuple(map(red, g)))
        assert red(transfer_Gm(B, h)) == transfer_Gm(Bk, tuple(map(red, h)))
        w = BigWittVector(B, [B.random(rng, 5) for _ in range(2)])
        wk = BigWittVector(Bk, [tuple(map(red, c)) for c in w.coeffs])
        assert BigWittVector(F3, [red(c) for c in transfer_Witt(B, w).coeffs]) == transfer_Witt(Bk, wk)
    check()


@pytest.mark.parametrize("tag", BASES)
def test_disjoint_union_additivity(tag):
    A = parse_ring(tag)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        B1, B2 = random_free_algebra(A, rng.randint(1, 2), rng), random_free_algebra(A, rng.randint(1, 2), rng)
        P = product_algebra([B1, B2])
        g1, g2 = B1.random(rng, 5), B2.random(rng, 5)
        assert transfer_Ga(P, P.join((g1, g2))) == A.add(transfer_Ga(B1, g1), transfer_Ga(B2, g2))
        h1, h2 = random_unit(B1, rng), random_unit(B2, rng)
        assert transfer_Gm(P, P.join((h1, h2))) == A.mul(transfer_Gm(B1, h1), transfer_Gm(B2, h2))
    check()


# --- p-typical routes ---------------------------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5])
def test_ptypical_routes_agree(p):
    A = GF(p)

    @given(seeds, st.integers(1, 3), st.integers(1, 2))
    def check(seed, d, n):
        rng = random.Random(seed)
        B = random_free_algebra(A, d, rng)
        x = PTypicalWitt(B, p, [B.random(rng, 5) for _ in range(n)])
        assert transfer_ptypical_native(B, x) == transfer_ptypical_projected(B, x)
    check()
