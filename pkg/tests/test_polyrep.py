import pytest
from hypothesis import given, strategies as st

from qschur import polyrep
from qschur.diagram import CrossNeg, CrossPos, DiagramError, Identity, Merge, OpenDot, SolidDot, Split, compose, lincomb, omega, tensor
from qschur.ring import IntLaurent, MultiLaurent, q_binom, q_int

Q, QI = IntLaurent.q(1), IntLaurent.q(-1)

polys3 = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)), st.integers(-3, 3), max_size=4
).map(lambda d: MultiLaurent(3, d))


@given(polys3, st.sampled_from([1, 2]))
def test_hecke_quadratic(f, i):
    # H^2 = (q^-1 - q) H + 1
    lhs = polyrep.hecke_action(f, (i, i))
    rhs = polyrep.hecke_action(f, (i,)).scale(QI - Q) + f
    assert lhs == rhs
    assert polyrep.hecke_action(f, (i, -i)) == f


@given(polys3)
def test_hecke_braid(f):
    assert polyrep.hecke_action(f, (1, 2, 1)) == polyrep.hecke_action(f, (2, 1, 2))


def test_hecke_index_check():
    with pytest.raises(polyrep.PolyRepError):
        polyrep.hecke_action(MultiLaurent.one(2), (2,))


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_merge_split_is_binomial(a, b):
    assert polyrep.equals(compose(Merge(a, b), Split(a, b)), lincomb((q_binom(a + b, a), Identity((a + b,)))))


def test_outputs_are_block_symmetric():
    f = MultiLaurent.one(3)
    g = polyrep.evaluate(compose(Split(1, 2), SolidDot(3)), f)
    assert polyrep.is_block_symmetric(g, (1, 2))
    h = polyrep.evaluate(tensor(SolidDot(1), Identity((2,))), g)
    assert polyrep.is_block_symmetric(h, (1, 2))


def test_evaluate_rejects_non_symmetric_input():
    x1 = MultiLaurent.variable(2, 1)
    with pytest.raises(polyrep.PolyRepError, match="Sym_mu"):
        polyrep.evaluate(SolidDot(2), x1)
    with pytest.raises(polyrep.PolyRepError):
        polyrep.evaluate(SolidDot(3), x1)


def test_probe_set_completeness():
    ps = polyrep.probe_set((1, 1))
    assert ps.complete and len(ps) == polyrep.generator_count((1, 1)) == 2
    big = polyrep.probe_set((1, 1, 1, 1), limit=5, seed=3)
    assert not big.complete and len(big) == 5
    assert big.monomials[0] == MultiLaurent.one(4)
    again = polyrep.probe_set((1, 1, 1, 1), limit=5, seed=3)
    assert big.monomials == again.monomials


def test_equals_detects_difference():
    assert not polyrep.equals(CrossPos(1, 1), CrossNeg(1, 1))
    assert polyrep.equals(compose(SolidDot(2), OpenDot(2)), Identity((2,)))
    cert = polyrep.compare(SolidDot(1), Identity((1,)))
    assert not cert.equal and cert.witness is not None


def test_compare_boundary_mismatch():
    with pytest.raises(DiagramError):
        polyrep.compare(Merge(1, 1), Split(1, 1))


def test_expand_merge_split():
    coeffs = polyrep.expand_in_basis(compose(Merge(1, 1), Split(1, 1)))
    assert list(coeffs.values()) == [q_int(2)]


@pytest.mark.parametrize("src,tgt,bound", [((1, 1), (2,), 1), ((2,), (1, 1), 2), ((1, 1), (1, 1), 1), ((2, 1), (1, 2), 1)])
def test_basis_rank_full(src, tgt, bound):
    r, n = polyrep.basis_rank(src, tgt, bound)
    assert r == n > 0


@pytest.mark.parametrize("name", sorted(polyrep.RELATIONS))
def test_relation_catalog_small(name):
    for p in polyrep.relation_instances(name, 2):
        rep = polyrep.verify_relation_report(name, limit=32, **p)
        assert rep.passed, (name, p, rep.witness)


def test_relation_instances_constraints():
    for p in polyrep.relation_instances("mergesplit", 3):
        assert p["a"] + p["c"] == p["b"] + p["d"] and max(p.values()) <= 2
    for p in polyrep.relation_instances("dots2strands", 3):
        assert p["r"] <= p["a"] and p["t"] <= p["b"]
    with pytest.raises(polyrep.PolyRepError):
        polyrep.relation_instances("nope", 2)


def test_broken_relation_is_caught():
    # dropping the binomial from mergesplit's simplest case must fail
    assert not polyrep.equals(compose(Merge(1, 1), Split(1, 1)), Identity((2,)))


def test_omega_packet_images_commute():
    imgs = polyrep.end_one_images(1, 2)
    assert len(imgs) == 5
    x = MultiLaurent.variable(1, 1)
    assert imgs[(1,)] == x
    assert imgs[(-1,)] == MultiLaurent.monomial((-1,))
