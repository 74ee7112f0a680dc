import itertools
from fractions import Fraction as F

import pytest

from artifact.exactalg import ParameterError, delta_point, make_params, sample_TIk_points, torus_point
from artifact.hecke import hecke_algebra
from artifact.indmod import (InducedModule, ModuleVector, verify_1exp, verify_b_basis, verify_baction,
                             verify_central_character, verify_module_axioms, verify_rho_I, verify_spherical,
                             verify_vaction)
from artifact.report import passed
from artifact.rootdata import root_datum

K, Q = F(3, 2), F(5, 7)


def module(letter, rank, sign, I, gamma=None, ks=None):
    d = root_datum(letter, rank)
    P = make_params(d, K, Q, ks)
    alg = hecke_algebra(d, P)
    if gamma is None:
        gamma = sample_TIk_points(d, P, I, sign, count=1)[0]
    return InducedModule(alg, sign, I, gamma)


def test_generators_on_v_e_a2():
    mod = module("A", 2, 1, {1})
    alg, g = mod.alg, mod.alg.group
    assert mod.act(alg.T(1), mod.v()) == mod.v().scale(K)
    assert mod.act(alg.T(2), mod.v()) == mod.v(g.simple(2))
    # alpha_1^vee = (2, -1) in fundamental-coweight coordinates
    assert mod.act(alg.Y((2, -1)), mod.v()) == mod.v().scale(K ** 2)
    neg = module("A", 2, -1, {1})
    assert neg.act(alg.T(1), neg.v()) == neg.v().scale(-1 / K)


def test_gamma_must_lie_in_TIk():
    d = root_datum("A", 1)
    alg = hecke_algebra(d, make_params(d, K, Q))
    with pytest.raises(ParameterError):
        InducedModule(alg, 1, {1}, torus_point([F(5)]))


def test_b_basis_a1():
    gamma = torus_point([F(7, 3)])
    mod = module("A", 1, 1, (), gamma)
    s1 = mod.alg.group.simple(1)
    assert mod.b(mod.alg.group.identity) == mod.v()
    # gamma^{alpha^vee} = gamma^2
    assert mod.b(s1)[s1] == 1 - gamma.coords[0] ** 2


def test_spherical_vectors():
    mod = module("A", 1, 1, (), torus_point([F(7, 3)]))
    s1 = mod.alg.group.simple(1)
    assert mod.spherical_vector() == ModuleVector({mod.alg.group.identity: 1, s1: K})
    d = root_datum("A", 2)
    P = make_params(d, K, Q)
    full = InducedModule(hecke_algebra(d, P), 1, {1, 2}, delta_point(d, P, 1))
    assert full.spherical_vector() == full.v()
    assert full.one_exp_rhs() == full.v()


def test_weight_decomposition_a1():
    mod = module("A", 1, 1, (), torus_point([F(7, 3)]))
    rep = mod.weight_decomposition()
    assert len(rep["weights"]) == 2 and rep["multiplicity_free"]
    degenerate = module("A", 1, 1, (), torus_point([F(1)]))
    rep = degenerate.weight_decomposition()
    assert not rep["calibrated"]


def subsets(n):
    return [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


CASES = [("A", 1, None), ("A", 2, None), ("B", 2, F(2, 5)), ("G", 2, F(5, 4))]


@pytest.mark.parametrize("letter,rank,ks", CASES)
def test_module_structure(letter, rank, ks):
    d = root_datum(letter, rank)
    for I in subsets(d.n):
        for sign in (1, -1):
            mod = module(letter, rank, sign, I, ks=ks)
            alg = mod.alg
            for check in (verify_vaction, verify_b_basis, verify_baction, verify_spherical, verify_rho_I):
                assert passed(check(mod)), (check.__name__, I, sign)
            assert passed(verify_central_character(mod, [d.basis_vector(j) for j in range(d.dim)]))
            elems = [alg.T(0), alg.T(1), alg.Y(d.basis_vector(0))]
            assert passed(verify_module_axioms(mod, elems))


@pytest.mark.parametrize("letter,rank,ks", CASES)
def test_1exp_all_I(letter, rank, ks):
    d = root_datum(letter, rank)
    P = make_params(d, K, Q, ks)
    alg = hecke_algebra(d, P)
    for I in subsets(d.n):
        for sign in (1, -1):
            count = 1 if len(I) == d.n else 3
            for gamma in sample_TIk_points(d, P, I, sign, count=count):
                assert passed(verify_1exp(InducedModule(alg, sign, I, gamma)))


def test_1exp_is_not_vacuous():
    mod = module("A", 2, 1, {1})
    wrong = InducedModule(mod.alg, -1, {1}, sample_TIk_points(mod.datum, mod.params, {1}, -1, count=1)[0])
    # comparing the sign - spherical vector with the sign + closed expansion must fail
    assert wrong.spherical_vector() != mod.one_exp_rhs()
