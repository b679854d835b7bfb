import pytest

from qschur import cycschur, hecke, polyrep
from qschur.combinat import PARMAT_ELL, PARMAT_FLAT, MultiComposition, enumerate_objects
from qschur.diagram import Identity, Merge, Red, SolidDot, Split, TraverseDown, TraverseUp, compose, tensor
from qschur.ring import q_int

MC = MultiComposition.cyclotomic


def test_object_conversion(ctx22):
    obj = (Red("1"), 1, Red("q"), 2)
    assert cycschur.object_to_multicomposition(obj, ctx22.us) == MC((1,), (2,))
    assert cycschur.object_to_multicomposition((1, Red("1"), Red("q")), ctx22.us) is None
    with pytest.raises(cycschur.CycError):
        cycschur.object_to_multicomposition((Red("q"), Red("1"), 2), ctx22.us)
    assert cycschur.mc_to_object(MC((1,), (2,)), ctx22.us) == obj


def test_merge_split_under_G(ctx12):
    red = Identity((Red("1"),))
    f = cycschur.cyc_morphism(compose(tensor(red, Merge(1, 1)), tensor(red, Split(1, 1))), ctx12)
    idt = hecke.identity_hom(ctx12, MC((2,)))
    assert f.hom.image == q_int(2) * idt.image


def test_black_strands_left_of_reds_vanish(ctx12):
    # dot on a strand dragged left of the red strand: passes through a zero object
    t = compose(TraverseUp(1, "1"), tensor(SolidDot(1), Identity((Red("1"),))), TraverseDown(1, "1"))
    t = tensor(t, Identity((1,)))
    h = cycschur.apply_G(t, ctx12)
    assert h.is_zero()


@pytest.mark.parametrize("m,us", [(2, ("1",)), (2, ("1", "q")), (3, ("1",))])
def test_double_sst_matches_cellular(m, us):
    ctx = cycschur._context(m, us)
    pairs = cycschur.double_sst_basis(ctx, check=True)
    assert len(pairs) == sum(hecke.hom_dimensions(ctx).values())


def test_cyc_equals_boundary_check(ctx22):
    pairs = cycschur.double_sst_basis(ctx22, check=False)
    f = pairs[0][1]
    assert f == f
    g = next(p for _, p in pairs if (p.source, p.target) != (f.source, f.target))
    with pytest.raises(cycschur.CycError):
        cycschur.cyc_equals(f, g)


@pytest.mark.parametrize("m,us", [(2, ("1",)), (2, ("1", "q")), (3, ("1", "q"))])
def test_flat_basis_dimensions(m, us):
    ctx = cycschur._context(m, us)
    for mu in enumerate_objects(m, len(us), empty_zero=True):
        for nu in enumerate_objects(m, len(us), empty_zero=True)[:3]:
            assert len(cycschur.cyc_hom_basis(ctx, mu, nu, PARMAT_FLAT)) == hecke.hom_dimensions(ctx, [mu, nu])[(mu, nu)]


def test_web_basis_level_one(ctx12):
    assert len(cycschur.cyc_hom_basis(ctx12, (1, 1), (1, 1), PARMAT_ELL)) == 2
    assert len(cycschur.cyc_hom_basis(ctx12, (2,), (1, 1), PARMAT_ELL)) == 1
    with pytest.raises(cycschur.CycError):
        cycschur.cyc_hom_basis(ctx12, (2,), (2,), "other")


@pytest.mark.parametrize("us", [("1",), ("1", "q"), ("2", "3")])
@pytest.mark.parametrize("r", [1, 2])
def test_vanishing(us, r):
    ctx = cycschur._context(r, us)
    for i in range(1, len(us) + 1):
        assert cycschur.cycpolyvanish(ctx, r, i).is_zero()


def test_vanishing_index_range(ctx12):
    with pytest.raises(cycschur.CycError):
        cycschur.g_vanishing_diagram(ctx12, 1, 2)


def test_structure_constants_identity(ctx12):
    basis = cycschur.double_sst_basis(ctx12)
    table = cycschur.structure_constants(ctx12, basis)
    homs = [f.hom for _, f in basis]
    for (x, y), coeffs in table.items():
        img = hecke.compose_hom(homs[x], homs[y]).image
        acc = ctx12.zero()
        for z, c in coeffs.items():
            acc = acc + c * homs[z].image
        assert acc == img


@pytest.mark.parametrize("name", ["webassoc", "mergesplit", "dotmovesplits+merge", "redslider", "balloon", "dotmoveadaptor"])
def test_relations_under_G(name):
    for p in polyrep.relation_instances(name, 1, u="1")[:3]:
        assert cycschur.relation_under_G(name, ("1", "q"), **{k: v for k, v in p.items() if k != "u"}, **({"red_index": 1} if "u" in p else {}))
