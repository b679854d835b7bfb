import itertools
import math

import pytest
from hypothesis import given, strategies as st

from qschur.combinat import (
    PARMAT_ELL,
    PARMAT_FLAT,
    RPARMAT,
    BasisLabel,
    MultiComposition,
    compositions,
    d_word,
    enumerate_basis_labels,
    enumerate_matrices,
    enumerate_objects,
    enumerate_sst,
    enumerate_standard,
    initial_tableau,
    longest_coset_rep,
    min_coset_reps,
    multipartitions,
    packet_degree,
    partitions,
    perm_compose,
    perm_inverse,
    perm_length,
    rational_partitions,
    reduced_word,
    sst_inverse_image,
    tableau_type,
    word_to_perm,
)


def _boxes(lam):
    return [(k, r, c) for k, comp in enumerate(lam.components) for r, n in enumerate(comp) for c in range(n)]


def brute_sst(lam, mu):
    """Count fillings by trying every arrangement of the content of mu."""
    content = [(p, i + 1) for p, comp in enumerate(mu.components) for i, x in enumerate(comp) for _ in range(x)]
    boxes = _boxes(lam)
    seen = set()
    for arr in itertools.permutations(content):
        if arr in seen:
            continue
        seen.add(arr)
    good = 0
    for arr in seen:
        f = dict(zip(boxes, arr))
        ok = all(f[(k, r, c)][0] >= k for k, r, c in boxes)
        ok = ok and all(f[(k, r, c - 1)] <= f[(k, r, c)] for k, r, c in boxes if c)
        ok = ok and all(f[(k, r - 1, c)] < f[(k, r, c)] for k, r, c in boxes if r)
        good += ok
    return good


def test_compositions_and_partitions():
    assert len(compositions(4)) == 8
    assert len(partitions(5)) == 7
    assert all(sum(p) == 5 for p in partitions(5))


@pytest.mark.parametrize("m,ell", [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_object_counts(m, ell):
    objs = enumerate_objects(m, ell)
    assert all(o.weight == m and o.level == ell for o in objs)
    # compositions of m spread over the ell + 1 regions between red strands
    expected = sum(
        math.prod(len(compositions(x)) if x else 1 for x in split)
        for split in itertools.product(range(m + 1), repeat=ell + 1)
        if sum(split) == m
    )
    assert len(objs) == expected


@pytest.mark.parametrize("m,ell", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2)])
def test_sst_against_brute_force(m, ell):
    lams = multipartitions(m, ell)
    objs = enumerate_objects(m, ell, empty_zero=True)[:6]
    for lam in lams:
        for mu in objs:
            assert len(enumerate_sst(lam, mu)) == brute_sst(lam, mu)


@pytest.mark.parametrize("m,ell", [(3, 1), (4, 1), (3, 2), (4, 2)])
def test_standard_tableaux_square_sum(m, ell):
    # sum over multipartitions of (number of standard tableaux)^2 = ell^m m!
    total = sum(len(enumerate_standard(lam)) ** 2 for lam in multipartitions(m, ell))
    assert total == ell**m * math.factorial(m)


def test_kostka_numbers():
    lam = MultiComposition.cyclotomic((2, 1))
    assert len(enumerate_sst(lam, MultiComposition.cyclotomic((1, 1, 1)))) == 2
    assert len(enumerate_sst(lam, MultiComposition.cyclotomic((3,)))) == 0
    assert len(enumerate_sst(lam, MultiComposition.cyclotomic((2, 1)))) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_rsk_count_at_level_one(m):
    # |Mat(mu, nu)| = sum_lam K_{lam mu} K_{lam nu}
    for mu in compositions(m):
        for nu in compositions(m):
            lhs = len(enumerate_matrices(nu, mu))
            rhs = sum(
                len(enumerate_sst(MultiComposition.cyclotomic(lam), MultiComposition.cyclotomic(mu)))
                * len(enumerate_sst(MultiComposition.cyclotomic(lam), MultiComposition.cyclotomic(nu)))
                for lam in partitions(m)
            )
            assert lhs == rhs


def test_matrices_have_margins():
    for A in enumerate_matrices((2, 1), (1, 2)):
        assert tuple(sum(r) for r in A) == (2, 1)
        assert tuple(sum(c) for c in zip(*A)) == (1, 2)


def test_rational_partitions_and_degree():
    assert rational_partitions(1, 2) == ((), (1,), (-1,), (1, 1), (-1, -1))
    assert packet_degree((1, -1)) == 2
    for nu in rational_partitions(2, 3):
        assert packet_degree(nu) <= 3
        assert list(nu) == sorted(nu, reverse=True)


def test_label_kinds():
    assert len(enumerate_basis_labels(RPARMAT, (2,), (1, 1), dot_bound=1)) == 5
    with pytest.raises(ValueError):
        enumerate_basis_labels(RPARMAT, (2,), (1, 1))
    with pytest.raises(ValueError):
        enumerate_basis_labels(PARMAT_ELL, (2,), (1, 1))
    with pytest.raises(ValueError):
        enumerate_basis_labels("nonsense", (2,), (1, 1))
    labs = enumerate_basis_labels(PARMAT_ELL, (1, 1), (1, 1), ell=1)
    assert len(labs) == 2 and all(isinstance(x, BasisLabel) for x in labs)


perms = st.integers(1, 5).flatmap(lambda n: st.permutations(range(n)).map(tuple))


@given(perms)
def test_reduced_word_roundtrip(w):
    word = reduced_word(w)
    assert len(word) == perm_length(w)
    assert word_to_perm(word, len(w)) == w


@given(perms)
def test_perm_inverse(w):
    e = tuple(range(len(w)))
    assert perm_compose(w, perm_inverse(w)) == e
    assert perm_length(perm_inverse(w)) == perm_length(w)


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_coset_reps(a, b):
    reps = min_coset_reps(a, b)
    assert len(reps) == math.comb(a + b, a)
    top = max(reps, key=lambda r: r[1])
    assert longest_coset_rep(a, b) == top
    assert top[1] == a * b


@pytest.mark.parametrize("m,ell", [(3, 1), (3, 2)])
def test_tableau_type_and_d_word(m, ell):
    for lam in multipartitions(m, ell):
        for t in enumerate_standard(lam):
            assert len(d_word(t)) >= 0
        assert d_word(initial_tableau(lam)) == ()
        for mu in enumerate_objects(m, ell, empty_zero=True)[:4]:
            for S in enumerate_sst(lam, mu):
                fibre = sst_inverse_image(S, mu)
                assert fibre and all(tableau_type(t, mu) == S for t in fibre)


@pytest.mark.parametrize("m,ell", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 2)])
def test_parmat_flat_count(m, ell):
    objs = enumerate_objects(m, ell, empty_zero=True)
    lams = multipartitions(m, ell)
    for mu in objs:
        for nu in objs:
            lhs = len(enumerate_basis_labels(PARMAT_FLAT, nu, mu))
            rhs = sum(len(enumerate_sst(lam, nu)) * len(enumerate_sst(lam, mu)) for lam in lams)
            assert lhs == rhs


def test_multicomposition_text_roundtrip():
    mc = MultiComposition.parse("|2,1|3")
    assert mc.components == ((), (2, 1), (3,))
    assert str(mc) == "|2,1|3"
    assert mc.weight == 6 and mc.level == 2
