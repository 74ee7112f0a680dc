import itertools

import pytest
from hypothesis import given, settings, strategies as st

from artifact.rootdata import RootDataError, cartan_matrix, gl_datum, root_datum

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3)]


def subsets(n):
    return [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


@pytest.mark.parametrize("letter,rank,order,npos", [
    ("A", 1, 2, 1), ("A", 2, 6, 3), ("A", 3, 24, 6), ("B", 2, 8, 4), ("G", 2, 12, 6), ("B", 3, 48, 9)])
def test_weyl_group_orders(letter, rank, order, npos):
    d = root_datum(letter, rank)
    assert len(d.group.elements) == order
    assert len(d.positive_roots) == npos
    assert d.group.longest.length == npos
    assert max(w.length for w in d.group.elements) == npos


def test_a1_group_is_e_and_s1():
    d = root_datum("A", 1)
    assert sorted(w.length for w in d.group.elements) == [0, 1]


def test_min_coset_reps_a2():
    d = root_datum("A", 2)
    reps = d.min_coset_reps({1})
    assert sorted(w.word for w in reps) == sorted([(), (2,), (1, 2)])
    assert len(d.min_coset_reps(())) == 6
    assert [w.word for w in d.min_coset_reps({1, 2})] == [()]


def test_abc_examples_a2():
    d = root_datum("A", 2)
    g = d.group
    assert d.abc_classify({1}, 1, g.identity) == ("C", 1)
    assert d.abc_classify({1}, 2, g.identity)[0] == "B"
    assert d.abc_classify({1}, 2, g.simple(2))[0] == "A"


@pytest.mark.parametrize("letter,rank", SMALL)
def test_abc_partition_and_blift(letter, rank):
    d = root_datum(letter, rank)
    w0 = d.group.longest
    for I in subsets(d.n):
        reps = d.min_coset_reps(I)
        wbar = d.coset_decomposition(w0, I)[0]
        no_b = []
        for w in reps:
            classes = [d.abc_classify(I, i, w)[0] for i in range(1, d.n + 1)]
            assert all(c in "ABC" for c in classes)
            if "B" not in classes:
                no_b.append(w)
        assert no_b == [wbar]


@pytest.mark.parametrize("letter,rank", SMALL)
def test_I_star_is_an_involution(letter, rank):
    d = root_datum(letter, rank)
    w0 = d.group.longest
    for I in subsets(d.n):
        wbar = d.coset_decomposition(w0, I)[0]
        star = {d.simple_roots.index(d.act_on_root(wbar, d.simple_roots[i - 1])) + 1 for i in I}
        wbar2 = d.coset_decomposition(w0, star)[0]
        back = {d.simple_roots.index(d.act_on_root(wbar2, d.simple_roots[i - 1])) + 1 for i in star}
        assert back == set(I)


@pytest.mark.parametrize("letter,rank,size", [("A", 1, 2), ("A", 2, 3), ("A", 3, 4), ("B", 2, 2), ("G", 2, 1),
                                              ("B", 3, 2)])
def test_omega_group(letter, rank, size):
    d = root_datum(letter, rank)
    om = d.omega_group()
    assert len(om) == size
    assert om[0].elem == d.identity
    for a in om:
        assert d.affine_length(a.elem) == 0
        for b in om:
            assert d.mul(a.elem, b.elem) == d.mul(b.elem, a.elem)
        inv = d.inv(a.elem)
        for j in range(d.n + 1):
            conj = d.prod([a.elem, d.affine_simple(j), inv])
            assert conj == d.affine_simple(a.perm[j])


def test_affine_lengths_a1():
    d = root_datum("A", 1)
    assert d.affine_length(d.affine_simple(0)) == 1
    assert d.affine_length(d.translation((2,))) == 2
    assert d.affine_length(d.translation((1,))) == 1


def test_s1_acts_on_fundamental_coweight_a2():
    d = root_datum("A", 2)
    s1 = d.group.simple(1)
    # alpha_1^vee = (2, -1) in fundamental-coweight coordinates
    assert s1.act((1, 0)) == (-1, 1)


def test_gl_zeta_power_is_central_translation():
    d = gl_datum(3)
    assert d.zeta_power(3) == d.translation((1, 1, 1))
    assert d.affine_length(d.zeta_power(1)) == 0


def test_bad_data_rejected():
    with pytest.raises(RootDataError):
        gl_datum(1)
    with pytest.raises(Exception):
        cartan_matrix("Z", 2)


words = st.lists(st.integers(min_value=0, max_value=2), max_size=6)


@settings(max_examples=40, deadline=None)
@given(words, words, words)
def test_affine_multiplication_is_associative(a, b, c):
    d = root_datum("A", 2)
    x, y, z = (d.prod([d.affine_simple(j) for j in w]) for w in (a, b, c))
    assert d.mul(d.mul(x, y), z) == d.mul(x, d.mul(y, z))
    assert d.mul(x, d.inv(x)) == d.identity


@settings(max_examples=40, deadline=None)
@given(words)
def test_length_bounded_by_word_length_and_parity(a):
    d = root_datum("A", 2)
    x = d.prod([d.affine_simple(j) for j in a])
    assert d.affine_length(x) <= len(a)
    assert (d.affine_length(x) - len(a)) % 2 == 0
    assert d.affine_length(x) == d.affine_length_bfs(x)
