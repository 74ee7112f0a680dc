from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from artifact.exactalg import LaurentPoly, LocalizedFn, delta_point, make_params
from artifact.macdonald import gamma_lambda
from artifact.opalg import (HValuedOpSum, ScalarOpSum, apply_T, apply_Y, apply_hecke, nabla_omega, nabla_op,
                            op_context, pi_omega, pi_T, sigma_omega, sigma_T, verify_factorization,
                            verify_nabla_relations, verify_pi_relations, verify_sigma_minus,
                            verify_sigma_relations, verify_w_pm_involution)
from artifact.report import passed
from artifact.rootdata import gl_datum, root_datum

K, Q = F(3, 2), F(5, 7)


def ctx_for(letter, rank, ks=None):
    d = gl_datum(rank) if letter == "GL" else root_datum(letter, rank)
    return op_context(d, make_params(d, K, Q, ks))


def test_pi_of_omega_is_the_group_element():
    ctx = ctx_for("A", 2)
    d = ctx.datum
    for om in d.omega_group()[1:]:
        assert pi_omega(ctx, om.elem) == ScalarOpSum.group(ctx, om.elem)


def test_pi_T1_on_constants_and_quadratic():
    ctx = ctx_for("A", 1)
    one = LaurentPoly.constant(1, 1)
    assert apply_T(ctx, 1, one) == one.scale(K)
    t = pi_T(ctx, 1)
    assert t * t - t.scale(K - 1 / K) - ScalarOpSum.identity(ctx) == ScalarOpSum(ctx)


def test_sigma_and_nabla_of_omega():
    ctx = ctx_for("A", 1)
    d, alg = ctx.datum, ctx.alg
    om = d.omega_group()[1].elem
    want = {om: {b: ctx.one_fn().scale(c) for b, c in alg.T_omega(om).terms.items()}}
    assert sigma_omega(ctx, om) == HValuedOpSum(ctx, want)
    assert nabla_omega(ctx, om) == HValuedOpSum(ctx, want)
    assert nabla_op(ctx, d.identity) == HValuedOpSum.identity(ctx)


def test_factorizations_on_T1():
    ctx = ctx_for("A", 2)
    assert sigma_T(ctx, 1).contract(1) == pi_T(ctx, 1)
    assert passed(verify_sigma_minus(ctx))


def test_E0_eigenvalue_matches_epsilon():
    d = root_datum("A", 2)
    P = make_params(d, K, Q)
    ictx = op_context(d, P.inverse_k())
    one = LaurentPoly.constant(1, 2)
    for lam in [(1, 0), (0, 1), (-1, 2)]:
        got = apply_Y(ictx, lam, one)
        assert got == one.scale(gamma_lambda(d, P, (0, 0)).inverse().monomial(lam))
        assert got == one.scale(delta_point(d, P.inverse_k(), 1).monomial(lam))


@pytest.mark.parametrize("letter,rank,ks", [("A", 1, None), ("A", 2, None), ("B", 2, F(2, 5)),
                                            ("GL", 2, None)])
def test_relations_as_operator_identities(letter, rank, ks):
    ctx = ctx_for(letter, rank, ks)
    assert passed(verify_pi_relations(ctx))
    assert passed(verify_sigma_relations(ctx))
    assert passed(verify_nabla_relations(ctx))
    tests = [LaurentPoly.monomial(ctx.datum.basis_vector(0)), LaurentPoly.constant(1, ctx.datum.dim)]
    for sign in (1, -1):
        assert passed(verify_w_pm_involution(ctx, sign, tests))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=1, max_size=4), min_size=1, max_size=3))
def test_pi_factors_through_sigma(words):
    assert passed(verify_factorization(ctx_for("A", 2), words))


elems = st.lists(st.one_of(st.tuples(st.just("T"), st.integers(0, 2)),
                           st.tuples(st.just("Y"), st.tuples(st.integers(-1, 1), st.integers(-1, 1)))),
                 max_size=3)
polys = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
                        st.fractions(min_value=-3, max_value=3, max_denominator=3), max_size=3).map(LaurentPoly)


@settings(max_examples=20, deadline=None)
@given(elems, elems, polys)
def test_pi_is_an_algebra_map(a, b, f):
    """pi(h1 h2) f = pi(h1) pi(h2) f with the product taken in the Hecke algebra."""
    ctx = ctx_for("A", 2)
    alg = ctx.alg

    def build(word):
        h = alg.one()
        for kind, arg in word:
            h = alg.mul(h, alg.T(arg) if kind == "T" else alg.Y(arg))
        return h
    h1, h2 = build(a), build(b)
    assert apply_hecke(ctx, alg.mul(h1, h2), f) == apply_hecke(ctx, h1, apply_hecke(ctx, h2, f))
