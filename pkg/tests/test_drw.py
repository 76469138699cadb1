import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittkit.drw import (DISTINCT, EQUAL, INCONCLUSIVE, BoundedPresentation, DRWExpression,
                         ExpressionSyntaxError, MonomialAlgebra, axioms_check, build_presentation,
                         de_rham_instance, degenerate_instance, dlog, eta_evaluate,
                         expression_to_witt, fd_power_reduce, kahler_differentials, koszul_check,
                         lambda_injectivity, level1_dimensions, level1_restriction,
                         mutated_instance, parse_expression, presentation_instance, unit_inverse)
from wittkit.witt.ptypical import PTypicalWitt

seeds = st.integers(0, 2 ** 32 - 1)


def teich(A, n, poly):
    return DRWExpression.teichmuller(A, n, poly)


# --- algebras and words ---------------------------------------------------------------------

def test_algebra_parsing_and_guards():
    assert MonomialAlgebra.parse("F3[t]/(t^4)").tag == "F3[t]/(t^4)"
    assert MonomialAlgebra.parse("F5").var is None
    with pytest.raises(ValueError, match="p must be odd"):
        MonomialAlgebra.parse("F2[x]")
    with pytest.raises(ValueError):
        MonomialAlgebra.parse("F3[x,y]")
    with pytest.raises(ValueError):
        MonomialAlgebra.parse("F9")


def test_canonical_words_absorb_p_powers():
    A = MonomialAlgebra.parse("F3[x]")
    # V[x^3] = V F[x] = 3 [x]
    assert DRWExpression.word(A, 2, heads=[(1, 3)]) == teich(A, 2, {1: 1}).scale(3)
    assert DRWExpression.word(A, 2, heads=[(1, 0)]) == DRWExpression.scalar(A, 2, 3)
    assert DRWExpression.word(A, 2, heads=[(2, 1)]).is_zero()
    assert teich(A, 2, {1: 1}).scale(9).is_zero()


def test_graded_commutativity_of_words():
    A = MonomialAlgebra.parse("F3[x]")
    dx, dx2 = teich(A, 2, {1: 1}).d(), teich(A, 2, {2: 1}).d()
    assert (dx * dx2 + dx2 * dx).is_zero()
    assert (dx * dx).is_zero()


def test_teichmuller_expression_reads_back_as_witt_vector():
    A = MonomialAlgebra.parse("F3[x]/(x^3)")
    R = A.poly_ring()
    for poly in ({0: 1, 1: 1}, {1: 2, 2: 1}, {0: 2}):
        e = teich(A, 2, poly)
        want = PTypicalWitt.teichmuller(R, 3, A.to_poly(poly), 2)
        assert expression_to_witt(e) == want


# --- the expression grammar ------------------------------------------------------------------

def test_parse_examples():
    A = MonomialAlgebra.parse("F3[x]")
    assert parse_expression("[x]", A, 2) == teich(A, 2, {1: 1})
    assert parse_expression("d[x^2]", A, 2) == teich(A, 2, {2: 1}).d()
    assert parse_expression("2*[t^5]*d[t]", A, 2) == teich(A, 2, {5: 1}) * teich(A, 2, {1: 1}).d().scale(2)
    assert parse_expression("V(F([x]))", A, 2) == DRWExpression.scalar(A, 2, 3) * teich(A, 2, {1: 1})
    # R and F read their argument one level up so the result lands at level n
    assert parse_expression("R([x])", A, 2) == teich(A, 2, {1: 1})
    assert parse_expression("V^1[x]", A, 2) == teich(A, 1, {1: 1}).V()
    for bad in ("[x", "d[x]*", "Q([x])", "[x] +", "2**[x]"):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression(bad, A, 2)


# --- Kahler differentials --------------------------------------------------------------------

def test_kahler_examples():
    K = kahler_differentials(3, ("x", "y"))
    x, y = K.monomial((1, 0)), K.monomial((0, 1))
    dx, dy = K.d(x), K.d(y)
    assert K.eq(K.d(K.wedge(x, y)), K.add(K.wedge(x, dy), K.wedge(y, dx)))
    assert K.eq(K.d(K.monomial((2, 0))), K.scale(K.wedge(x, dx), -1))
    assert K.format(K.d(K.monomial((2, 0)))) == "2*x*dx"
    # Omega^2 is free of rank one on dx^dy: weight w holds the w-1 monomials of degree w-2
    assert [K.dimension(2, w) for w in range(6)] == [0, 0, 1, 2, 3, 4]
    assert K.is_zero(K.wedge(K.wedge(dx, dy), dx))
    assert [K.dimension(3, w) for w in range(5)] == [0] * 5


@pytest.mark.parametrize("m", [3, 5, 9])
def test_kahler_d_squared_is_zero(m):
    K = kahler_differentials(m, ("x", "y"), {"x": 3})

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        f = K.from_poly({(rng.randrange(4), rng.randrange(4)): rng.randrange(1, m) for _ in range(4)})
        g = K.from_poly({(rng.randrange(4), rng.randrange(4)): rng.randrange(1, m) for _ in range(4)})
        assert K.is_zero(K.d(K.d(f)))
        assert K.eq(K.d(K.wedge(f, g)), K.add(K.wedge(K.d(f), g), K.wedge(f, K.d(g))))
        assert K.eq(K.d(K.wedge(f, K.d(g))), K.wedge(K.d(f), K.d(g)))
    check()


# --- presentations ----------------------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5, 7])
def test_prime_field_level_one_has_order_p(p):
    P = build_presentation(f"F{p}", n=1, q=0, dx=0, dr=1)
    assert sum(b.quotient_log for b in P.blocks()) == 1
    A = P.A
    for a in range(p):
        assert level1_restriction(teich(A, 1, {0: a})) == ({(): {(0,): a}} if a else {})


@pytest.mark.parametrize("tag, n", [("F3", 1), ("F3", 2), ("F3", 3), ("F5", 2),
                                    ("F3[x]/(x^2)", 2), ("F3[x]/(x^3)", 2), ("F5[x]/(x^2)", 2)])
def test_degree_zero_quotient_has_witt_vector_order(tag, n):
    # |W_n(A)| = |A|^n, computed independently of any relation
    A = MonomialAlgebra.parse(tag)
    P = BoundedPresentation(A, n, 0, 10, 2)
    assert sum(b.quotient_log for b in P.blocks()) == n * (A.trunc or 1)


def test_lambda_images_distinct_for_f3_level_two():
    out = lambda_injectivity(3, 2)
    assert out["images"] == 9 and out["pairs"] == 36
    assert out["collapsed"] == 0 and out["roundtrip"] == 9 and out["pass"]


@pytest.mark.parametrize("p, n", [(3, 1), (3, 3), (5, 1), (5, 2), (5, 3)])
def test_lambda_injectivity(p, n):
    assert lambda_injectivity(p, n)["pass"]


@pytest.mark.parametrize("q", [0, 1])
def test_level_one_matches_kahler(q):
    for p in (3, 5):
        rows = level1_dimensions(MonomialAlgebra(p, "x"), q, 4)
        assert rows and all(r["presentation"] == r["kahler"] for r in rows)


def test_verdict_examples():
    A = MonomialAlgebra.parse("F3[x]")
    P = BoundedPresentation(A, 2, 0, 3, 1)
    x = teich(A, 2, {1: 1})
    assert P.equal_at_depth(x.V().F(), x.scale(3)).status == EQUAL
    P1 = BoundedPresentation(A, 2, 1, 3, 1)
    lhs = teich(A, 3, {1: 1}).d().F()
    assert P1.equal_at_depth(lhs, teich(A, 2, {2: 1}) * x.d()).status == EQUAL
    v = P.equal_at_depth(x, teich(A, 2, {1: 2}))
    assert v.status == DISTINCT and v.separator in ("level1_restriction", "R^0 F^1")


def test_v_words_die_at_level_one():
    A = MonomialAlgebra.parse("F3[x]")
    assert level1_restriction(teich(A, 2, {1: 1}).V()) == {}
    K = kahler_differentials(3)
    assert level1_restriction(teich(A, 2, {1: 1}).d()) == K.d(K.monomial((1,)))


def test_distinct_lambda_images_need_a_separator():
    # 1 + V(1) = 4 and 1 agree at level one, so only the Witt reading separates them
    A = MonomialAlgebra.parse("F3")
    P = BoundedPresentation(A, 2, 0, 0, 1)
    one = DRWExpression.scalar(A, 2, 1)
    a, b = one + DRWExpression.scalar(A, 1, 1).V(), one
    assert P.reduce(a - b)
    v = P.equal_at_depth(a, b)
    assert v.status == DISTINCT and v.separator == "witt_vector"


def test_inconclusive_when_no_separator_applies():
    # 3 d[x] = V([x^2] d[x]) is nonzero in W_2 Omega^1, yet F and R both kill it
    A = MonomialAlgebra.parse("F3[x]")
    e = teich(A, 2, {1: 1}).d().scale(3)
    for dr in (1, 2):
        v = BoundedPresentation(A, 2, 1, 3, dr).equal_at_depth(e, DRWExpression.zero(A, 2, 1))
        assert v.status == INCONCLUSIVE and v.separator is None and v.residual


def test_v_of_exact_forms_vanish_at_level_two():
    # x^3 dx = d(x^4) in Omega^1 over F_3, so V of it is 3 dV[x^4] = 0 at level 2
    A = MonomialAlgebra.parse("F3[x]")
    P = BoundedPresentation(A, 2, 1, 4, 1)
    e = teich(A, 1, {1: 1}).V() * teich(A, 2, {1: 1}).d()
    assert P.equal_at_depth(e, DRWExpression.zero(A, 2, 1)).status == EQUAL


def test_expression_outside_presentation_is_rejected():
    A, B = MonomialAlgebra.parse("F3[x]"), MonomialAlgebra.parse("F5[x]")
    P = BoundedPresentation(A, 2, 0, 2, 1)
    with pytest.raises(ValueError):
        P.reduce(teich(B, 2, {1: 1}))
    with pytest.raises(ValueError):
        P.reduce(teich(A, 3, {1: 1}))


def test_presentation_guards():
    with pytest.raises(ValueError):
        BoundedPresentation(MonomialAlgebra.parse("F3"), 0, 0, 1, 1)
    with pytest.raises(ValueError):
        BoundedPresentation(MonomialAlgebra.parse("F3"), 1, 0, 1, 0)
    with pytest.raises(ValueError):
        build_presentation("F3[x]", p=5)


def test_equal_verdicts_are_stable_under_depth():
    A = MonomialAlgebra.parse("F3[x]")
    x = teich(A, 2, {1: 1})
    cases = [(x.V().F(), x.scale(3)), (x.d().F().V(), x.d().scale(3)),
             (teich(A, 1, {2: 1}).V(), (teich(A, 1, {1: 1}) * teich(A, 1, {1: 1})).V())]
    for dx, dr in product((2, 3, 4), (1, 2)):
        P = BoundedPresentation(A, 2, 0, dx, dr, eager=False)
        for lhs, rhs in cases:
            assert P.equal_at_depth(lhs, rhs).status == EQUAL


def test_koszul_sign_discipline():
    A = MonomialAlgebra.parse("F3[x]")
    P = BoundedPresentation(A, 2, 2, 3, 1, eager=False)
    rng = random.Random(5)
    for _ in range(6):
        f = {rng.randrange(3): rng.randrange(1, 3)}
        g = {rng.randrange(3): rng.randrange(1, 3)}
        assert koszul_check(A, 2, f, g, P) == EQUAL


def test_presentation_json_round_trip():
    A = MonomialAlgebra.parse("F3[x]")
    P = BoundedPresentation(A, 2, 1, 3, 1)
    Q = BoundedPresentation.from_json(P.to_json())
    lhs = parse_expression("F(d[x^2])", A, 2)
    rhs = parse_expression("2*[x^5]*d[x]", A, 2)
    assert Q.equal_at_depth(lhs, rhs).status == EQUAL
    assert Q.dumps() == BoundedPresentation.from_json(Q.to_json()).dumps()


# --- eta, dlog and the F^e d[t^m] identity ---------------------------------------------------

def test_eta_examples():
    A = MonomialAlgebra.parse("F3[x]/(x^3)")
    a = {0: 1, 1: 1}
    assert eta_evaluate(A, [a], 2) == teich(A, 2, a)
    assert eta_evaluate(A, [a, a], 2) == teich(A, 2, a).d()
    assert eta_evaluate(A, [{0: 1}, a], 2) == dlog(A, a, 2)
    with pytest.raises(ValueError):
        eta_evaluate(A, [{1: 1}], 2)
    with pytest.raises(ValueError):
        eta_evaluate(A, [a, {1: 1}], 2)


def test_eta_diagonal_is_compatible_with_d():
    A = MonomialAlgebra.parse("F3[x]/(x^3)")
    P = BoundedPresentation(A, 2, 1, 2, 1, eager=False)
    for a in ({0: 1, 1: 1}, {0: 2, 2: 1}, {0: 1, 1: 2, 2: 2}):
        assert P.equal_at_depth(eta_evaluate(A, [a, a], 2), teich(A, 2, a).d()).status == EQUAL


def test_unit_inverse():
    A = MonomialAlgebra.parse("F5[x]/(x^4)")
    f = {0: 2, 1: 3, 3: 1}
    g = unit_inverse(A, f)
    prod = {}
    for a, x in f.items():
        for b, y in g.items():
            prod[a + b] = prod.get(a + b, 0) + x * y
    assert A.reduce_poly(prod) == {0: 1}
    with pytest.raises(ValueError):
        unit_inverse(MonomialAlgebra.parse("F5[x]"), f)


@pytest.mark.parametrize("m, e", [(1, 1), (2, 1), (4, 1), (1, 2), (2, 2), (4, 2)])
def test_fd_power_reduce_p3(m, e):
    assert fd_power_reduce(3, m, e).status == EQUAL


@pytest.mark.parametrize("m", [1, 2, 4, 5])
def test_fd_power_reduce_e0(m):
    assert fd_power_reduce(3, m, 0).status == EQUAL


def test_fd_power_reduce_p5():
    assert fd_power_reduce(5, 2, 1).status == EQUAL


def test_fd_power_reduce_rejects_p_dividing_m():
    with pytest.raises(ValueError, match="divides"):
        fd_power_reduce(3, 3, 1)


# --- axiom verifier -------------------------------------------------------------------------

@pytest.mark.parametrize("p", [3, 5])
def test_degenerate_instance_passes(p):
    rep = axioms_check(degenerate_instance(p, levels=3))
    assert rep.passed and rep.cases > 0


def test_de_rham_instance_passes():
    rep = axioms_check(de_rham_instance(3))
    assert rep.passed and rep.cases > 0


def test_presentation_instance_passes():
    rep = axioms_check(presentation_instance(MonomialAlgebra.parse("F3[x]"), levels=2))
    assert rep.passed, rep.to_json()["failures"][:3]


def test_mutated_instance_fails_fv():
    rep = axioms_check(mutated_instance(3))
    assert not rep.passed
    assert any("FV" in f.to_json()["axiom"] for f in rep.failures)
    assert rep.to_json()["pass"] is False
