import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from artifact.exactalg import LaurentPoly, delta_point, make_params
from artifact.hecke import hecke_algebra
from artifact.indmod import InducedModule
from artifact.macdonald import gamma_lambda, nonsymmetric_macdonald
from artifact.opalg import op_context
from artifact.qkz import (EigenfunctionError, _legs_equal, alpha_embedding, build_flat_section,
                          cherednik_matsuo, cocycle_compose, cocycle_for, cocycle_simple_alternate,
                          find_parabolic_instances, flatness_report, gl_flat_check, parabolic_project,
                          project_and_certify, random_affine_element, random_section, recover_eigenfunction,
                          verify_alpha, verify_cm_correspondence, verify_cocycle, verify_prop_aa,
                          verify_xi_equivariance)
from artifact.report import passed
from artifact.rootdata import gl_datum, root_datum

K, Q = F(3, 2), F(5, 7)
A1, A2, GL2, GL3 = root_datum("A", 1), root_datum("A", 2), gl_datum(2), gl_datum(3)


def P(d):
    return make_params(d, K, Q)


def section_for(d, mu, sign):
    p = P(d)
    E = nonsymmetric_macdonald(d, p, mu)
    gamma = gamma_lambda(d, p, mu).act(d.group.longest)
    return build_flat_section(d, p, sign, (), gamma, E)


def test_cocycle_generators_a1():
    ctx = op_context(A1, P(A1))
    alg = ctx.alg
    unit = {(alg.group.identity, alg.zero_vec): ctx.one_fn()}
    assert _legs_equal(cocycle_for(ctx, A1.identity), unit)
    om = A1.omega_group()[1].elem
    assert _legs_equal(cocycle_for(ctx, om), {b: ctx.one_fn().scale(c) for b, c in alg.T_omega(om).terms.items()})
    for j in (0, 1):
        c = cocycle_for(ctx, A1.affine_simple(j))
        assert _legs_equal(c, cocycle_simple_alternate(ctx, j))
        assert _legs_equal(cocycle_compose(ctx, c, A1.affine_simple(j), c), unit)


@pytest.mark.parametrize("d", [A1, A2, GL2], ids=["A1", "A2", "GL2"])
def test_cocycle_suite(d):
    assert passed(verify_cocycle(op_context(d, P(d)), pairs=15, max_len=4, seed=3))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cocycle_condition_random_pairs(seed):
    ctx = op_context(A2, P(A2))
    rng = random.Random(seed)
    x = random_affine_element(A2, rng, 3)
    y = random_affine_element(A2, rng, 3)
    lhs = cocycle_for(ctx, A2.mul(x, y))
    assert _legs_equal(lhs, cocycle_compose(ctx, cocycle_for(ctx, x), x, cocycle_for(ctx, y)))


@pytest.mark.parametrize("d,mu", [(A1, (-1,)), (A1, (2,)), (A2, (1, 0)), (A2, (-1, 1)), (GL2, (1, 0)),
                                  (GL3, (0, 1, 0))])
def test_flat_sections_from_eigenfunctions(d, mu):
    ctx = op_context(d, P(d))
    for sign in (1, -1):
        psi = section_for(d, mu, sign)
        rep = flatness_report(ctx, psi)
        assert passed(rep) and rep["W_invariant"]
        assert recover_eigenfunction(psi) == nonsymmetric_macdonald(d, P(d), mu)


def test_one_dimensional_module_section():
    p = P(A2)
    psi = build_flat_section(A2, p, 1, {1, 2}, delta_point(A2, p, 1), LaurentPoly.constant(1, 2))
    assert len(psi.comps) == 1
    assert passed(flatness_report(op_context(A2, p), psi))
    assert cherednik_matsuo(psi) == psi[A2.group.identity]


def test_mismatched_gamma_is_rejected_and_not_flat():
    p = P(A2)
    E = nonsymmetric_macdonald(A2, p, (1, 0))
    wrong = gamma_lambda(A2, p, (0, 1)).act(A2.group.longest)
    with pytest.raises(EigenfunctionError):
        build_flat_section(A2, p, 1, (), wrong, E)
    psi = build_flat_section(A2, p, 1, (), wrong, E, check=False)
    assert not passed(flatness_report(op_context(A2, p), psi))


def test_projection_for_empty_I_is_identity():
    p = P(A2)
    E = nonsymmetric_macdonald(A2, p, (1, -1))
    assert parabolic_project(A2, p, E, (), 1) == E


def test_gl2_parabolic_instances():
    p = P(GL2)
    found = find_parabolic_instances(GL2, p, {1})
    assert found
    assert all(r["mu"][0] == r["mu"][1] for r in found)
    ctx = op_context(GL2, p)
    for r in found:
        psi = build_flat_section(GL2, p, r["sign"], {1}, r["gamma"], r["phi"])
        assert passed(flatness_report(ctx, psi))
    # with gamma = w_0 gamma_mu the sign - projection of E_{(1,1)} vanishes and is reported as zero
    mu = (1, 1)
    E = nonsymmetric_macdonald(GL2, p, mu)
    gamma = gamma_lambda(GL2, p, mu).act(GL2.group.longest)
    out, rep = project_and_certify(GL2, p, E, {1}, -1, gamma)
    assert out.is_zero() and rep["context"]["zero"]


@pytest.mark.parametrize("d,mu", [(A1, (1,)), (A2, (1, 0)), (GL2, (0, 1)), (GL3, (1, 0, 0))])
def test_cherednik_matsuo_correspondence(d, mu):
    for sign in (1, -1):
        assert passed(verify_cm_correspondence(d, P(d), mu, sign))


def test_prop_aa_on_flat_and_random_sections():
    ctx = op_context(A2, P(A2))
    psi = section_for(A2, (1, 0), 1)
    rep = verify_prop_aa(ctx, psi)
    assert passed(rep)
    assert all(r["sigma"] and r["nabla"] and r["pi_vs_J"] for r in rep["rows"])
    rnd = random_section(psi.module, random.Random(5))
    rep = verify_prop_aa(ctx, rnd)
    assert passed(rep)
    assert any(not (r["sigma"] or r["nabla"] or r["pi_vs_J"]) for r in rep["rows"])


def test_gl_closed_formula():
    p = P(GL2)
    for mu in [(1, 0), (0, 0)]:
        E = nonsymmetric_macdonald(GL2, p, mu)
        gamma = gamma_lambda(GL2, p, mu).act(GL2.group.longest)
        for sign in (1, -1):
            assert passed(gl_flat_check(GL2, p, sign, (), gamma, E))
    p3 = P(GL3)
    inst = find_parabolic_instances(GL3, p3, {1})
    assert inst
    r = inst[0]
    assert passed(gl_flat_check(GL3, p3, r["sign"], {1}, r["gamma"], r["phi"]))


def test_alpha_embedding_a2():
    p = P(A2)
    inst = find_parabolic_instances(A2, p, {1})
    assert inst
    r = inst[0]
    psi = build_flat_section(A2, p, r["sign"], {1}, r["gamma"], r["phi"])
    ctx = op_context(A2, p)
    assert len(psi.module.basis) == 3
    img = alpha_embedding(psi)
    assert len(img.module.basis) == 6
    assert passed(verify_alpha(ctx, psi))
    assert passed(verify_xi_equivariance(ctx, psi))


def test_alpha_for_empty_I_is_a_reindexing():
    psi = section_for(A2, (1, 0), 1)
    img = alpha_embedding(psi)
    assert img.comps == psi.comps
