from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from artifact.exactalg import (LaurentPoly, LocalizedFn, ParameterError, Params, c_function, delta_point,
                               demazure_divide, divide_by_factor, in_TIk, make_params, make_torus_point_in_TIk,
                               q_weyl_act, regularity_failures, sample_TIk_points, torus_point)
from artifact.rootdata import gl_datum, root_datum

A1 = root_datum("A", 1)
A2 = root_datum("A", 2)
K, Q = F(3, 2), F(5, 7)


def mono(*e, c=1):
    return LaurentPoly.monomial(tuple(e), F(c))


def test_params_reject_zero():
    with pytest.raises(ParameterError):
        make_params(A1, 0, Q)
    with pytest.raises(ParameterError):
        make_params(A1, K, 0)
    with pytest.raises(ParameterError):
        make_params(A1, 1.5, Q)


def test_translation_scales_monomials_a1():
    P = make_params(A1, K, Q)
    # <varpi, varpi> = 1/2 in A_1 and q^{1/2} = q_root
    got = q_weyl_act(A1, P, A1.translation((1,)), mono(1))
    assert got == mono(1, c=1 / Q)
    assert q_weyl_act(A1, P, A1.identity, mono(3)) == mono(3)


def test_c_function_a1():
    P = make_params(A1, K, Q)
    a = (F(0), (2,))
    c = c_function(A1, P, a)
    one = LaurentPoly.constant(1, 1)
    want = LocalizedFn.over(one.scale(1 / K) - mono(2, c=K), [((2,), F(1))])
    assert c == want
    # t^{alpha^vee} = k^{-2}: the numerator vanishes there
    assert c.evaluate(torus_point([1 / K])) == 0
    minus = c_function(A1, P, (F(0), (-2,)))
    assert c + minus == LocalizedFn.const(K + 1 / K, 1)


def test_demazure_divide_a1():
    P = make_params(A1, K, Q)
    one = LaurentPoly.constant(1, 1)
    assert demazure_divide(A1, P, one, 1).is_zero()
    # (s f - f) / (1 - e^{-alpha^vee}) with alpha^vee = 2 varpi
    assert demazure_divide(A1, P, mono(1), 1) == -mono(1)
    assert demazure_divide(A1, P, mono(2), 1) == -(mono(2) + one)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=4),
       st.integers(0, 2))
def test_demazure_divide_postcondition(exps, i):
    P = make_params(A2, K, Q)
    f = LaurentPoly({tuple(e): F(j + 1) for j, e in enumerate(exps)})
    g = demazure_divide(A2, P, f, i)
    s, beta = A2.affine_simple_root(i)
    denom = LaurentPoly.constant(1, 2) - LaurentPoly.monomial(tuple(-x for x in beta), P.q_pow(-s))
    sf = q_weyl_act(A2, P, A2.affine_simple(i), f)
    assert denom * g == sf - f


def test_divide_by_factor_remainder():
    assert divide_by_factor(mono(1) + LaurentPoly.constant(1, 1), (1,), F(1)) is None
    assert divide_by_factor(LaurentPoly.constant(1, 1) - mono(2, c=4), (1,), F(2)) == \
        LaurentPoly.constant(1, 1) + mono(1, c=2)


def test_torus_points_in_TIk():
    P = make_params(A1, K, Q)
    g = make_torus_point_in_TIk(A1, P, {1}, [])
    assert g.coords == (K,)
    assert make_torus_point_in_TIk(A1, P, (), [F(2)]).coords == (F(2),)
    P2 = make_params(A2, K, Q)
    g2 = make_torus_point_in_TIk(A2, P2, {1}, [F(64)])
    assert g2.monomial(A2.simple_coroots[0]) == K ** 2
    assert in_TIk(A2, P2, {1}, g2)
    for s in (1, -1):
        for t in sample_TIk_points(A2, P2, {2}, s, count=3):
            assert in_TIk(A2, P2, {2}, t, s)
            assert not [f for f in regularity_failures(A2, P2, {2}, t, s) if f[1] == "gamma^coroot = 1"]


def test_delta_points():
    P = make_params(A1, K, Q)
    assert delta_point(A1, P, 1).coords == (K,)
    # (-k)^{-alpha} evaluated on varpi
    assert delta_point(A1, P, -1).coords == (-1 / K,)


def test_gl_params_use_unit_m():
    d = gl_datum(2)
    P = make_params(d, K, Q)
    assert isinstance(P, Params) and P.m == 1


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=5)
exps2 = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
polys = st.dictionaries(exps2, coeff, max_size=4).map(LaurentPoly)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_laurent_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f - f == LaurentPoly()


@settings(max_examples=40, deadline=None)
@given(polys, polys, st.lists(st.integers(0, 2), max_size=4))
def test_q_action_is_an_automorphism(f, g, word):
    P = make_params(A2, K, Q)
    x = A2.prod([A2.affine_simple(j) for j in word])
    assert q_weyl_act(A2, P, x, f * g) == q_weyl_act(A2, P, x, f) * q_weyl_act(A2, P, x, g)


factors = st.lists(st.tuples(st.sampled_from([(1, 0), (0, 1), (1, 1), (2, -1)]),
                             st.sampled_from([F(1), F(2), F(4, 9), F(-3)])), max_size=2)


@settings(max_examples=50, deadline=None)
@given(polys, factors, polys, factors)
def test_localized_arithmetic_is_consistent(f, fa, g, ga):
    a = LocalizedFn.over(f, fa)
    b = LocalizedFn.over(g, ga)
    # clearing denominators: (a + b) * D = a * D + b * D for D the product of all factors
    D = LocalizedFn.poly(LaurentPoly.constant(1, 2))
    for beta, rho in fa + ga:
        D = D * LocalizedFn.poly(LaurentPoly.constant(1, 2) - LaurentPoly.monomial(beta, rho))
    assert ((a + b) * D).is_poly()
    assert (a + b) * D == a * D + b * D
    assert a * b == b * a
    assert a - a == LocalizedFn.poly(LaurentPoly())


@settings(max_examples=50, deadline=None)
@given(polys, factors, polys, st.tuples(st.sampled_from([F(2), F(3, 5), F(-7, 2)]),
                                        st.sampled_from([F(5), F(2, 11), F(-3)])))
def test_evaluation_is_multiplicative(f, fa, g, t):
    a = LocalizedFn.over(f, fa)
    b = LocalizedFn.poly(g)
    pt = torus_point(t)
    for beta, rho in fa:
        assume(rho * pt.monomial(beta) != 1)
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
