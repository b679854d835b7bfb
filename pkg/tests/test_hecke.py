import pytest
from hypothesis import given, strategies as st

from qschur import hecke
from qschur.combinat import MultiComposition, enumerate_objects, enumerate_sst, multipartitions
from qschur.ring import IntLaurent, MultiLaurent

Q, QI = IntLaurent.q(1), IntLaurent.q(-1)


def letters(m):
    return st.lists(
        st.one_of(
            st.tuples(st.just("H"), st.integers(1, m - 1)),
            st.tuples(st.just("Hinv"), st.integers(1, m - 1)),
            st.tuples(st.just("X"), st.integers(1, m), st.integers(-1, 2)),
        ),
        max_size=5,
    )


AFF3 = hecke.AKContext(3, affine=True)
CYC = {(1, 2): hecke.AKContext(2, ("1",)), (2, 2): hecke.AKContext(2, ("1", "q")), (2, 3): hecke.AKContext(3, ("2", "q"))}

probe = MultiLaurent.monomial((2, 0, -1)) + MultiLaurent.monomial((0, 1, 1)).scale(Q)


@given(letters(3), letters(3))
def test_affine_product_matches_polynomial_action(w1, w2):
    a, b = AFF3.word(w1), AFF3.word(w2)
    assert (a * b).act(probe) == a.act(b.act(probe))


@given(letters(3), letters(3), letters(3))
def test_cyclotomic_associative(w1, w2, w3):
    ctx = CYC[(2, 3)]
    a, b, c = ctx.word(w1), ctx.word(w2), ctx.word(w3)
    assert (a * b) * c == a * (b * c)


@given(letters(3).map(lambda w: [x for x in w if x[0] != "X" or x[2] >= 0]), letters(3).map(lambda w: [x for x in w if x[0] != "X" or x[2] >= 0]))
def test_reduction_is_a_homomorphism(w1, w2):
    ctx = CYC[(2, 3)]
    a, b = AFF3.word(w1), AFF3.word(w2)
    assert ctx.reduce(a * b) == ctx.reduce(a) * ctx.reduce(b)


@pytest.mark.parametrize("key", sorted(CYC))
def test_cyclotomic_relation_and_inverses(key):
    ctx = CYC[key]
    x1 = ctx.X(1)
    poly = ctx.one()
    for u in ctx.us:
        poly = poly * (x1 - ctx.scalar(u))
    assert poly.is_zero()
    for j in range(1, ctx.m + 1):
        assert ctx.X(j) * ctx.X(j, -1) == ctx.one()
    for i in range(1, ctx.m):
        h = ctx.H(i)
        assert h * h == (QI - Q) * h + ctx.one()


@pytest.mark.parametrize("key", sorted(CYC))
def test_straightening_closes_on_symbols(key):
    ctx = CYC[key]
    syms = set(ctx.symbols())
    assert len(syms) == ctx.dimension
    for i in range(1, ctx.m):
        for s in syms:
            el = hecke.AKElement(ctx, {s: IntLaurent.const(1)})
            assert set((ctx.H(i) * el).terms) <= syms
            assert set((ctx.X(1) * el).terms) <= syms


@given(letters(2), letters(2))
def test_star_is_anti_involution(w1, w2):
    ctx = CYC[(2, 2)]
    a, b = ctx.word(w1), ctx.word(w2)
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a


def test_affine_has_no_dimension():
    with pytest.raises(hecke.HeckeError):
        AFF3.dimension
    with pytest.raises(hecke.HeckeError):
        hecke.AKContext(2, ())


@pytest.mark.parametrize("m,us,size", [(2, ("1",), 5), (3, ("1",), 33), (2, ("1", "q"), 55)])
def test_cellular_basis_size_and_independence(m, us, size):
    ctx = hecke.AKContext(m, us)
    basis = hecke.phi_basis(ctx, check=True)
    assert len(basis) == size
    expected = sum(
        len(enumerate_sst(lam, mu)) * len(enumerate_sst(lam, nu))
        for lam in multipartitions(m, len(us))
        for mu in enumerate_objects(m, len(us), empty_zero=True)
        for nu in enumerate_objects(m, len(us), empty_zero=True)
    )
    assert size == expected == sum(hecke.hom_dimensions(ctx).values())
    assert all(c == r for c, r in hecke.phi_independence(ctx, basis).values())


def test_module_ranks_level_one():
    ctx = CYC[(1, 2)]
    assert hecke.module_space(ctx, MultiComposition.cyclotomic((2,))).rank() == 1
    assert hecke.module_space(ctx, MultiComposition.cyclotomic((1, 1))).rank() == 2


def test_hom_composition_and_identity():
    ctx = CYC[(2, 2)]
    basis = hecke.phi_basis(ctx)
    for f in basis[:8]:
        idt = hecke.identity_hom(ctx, f.hom.target)
        assert hecke.compose_hom(idt, f.hom).image == f.hom.image
        assert hecke.hom_well_defined(ctx, f.hom.source, f.hom.image)


def test_hom_well_defined_rejects_bad_image():
    ctx = CYC[(1, 2)]
    mu = MultiComposition.cyclotomic((2,))
    # m_(2) -> H_1 does not respect the right ideal
    assert not hecke.hom_well_defined(ctx, mu, ctx.H(1))
