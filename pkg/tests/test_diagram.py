import pytest
from hypothesis import given, strategies as st

from qschur.combinat import RPARMAT, MultiComposition, enumerate_basis_labels, enumerate_sst, multipartitions
from qschur.diagram import (
    CrossNeg,
    CrossPos,
    DiagramError,
    ElementaryRibbon,
    Identity,
    LinearCombination,
    Merge,
    OpenDot,
    Red,
    SolidDot,
    Split,
    TraverseDown,
    TraverseUp,
    compose,
    degrees,
    elaborate,
    from_json,
    g_diagram,
    lincomb,
    omega,
    omega_packet,
    parse_sexpr,
    slices,
    sst_to_ribbon,
    tensor,
    to_json,
    to_sexpr,
    transpose,
    validate,
)


def small_gens():
    th = st.integers(1, 3)
    return st.one_of(
        st.builds(Merge, th, th),
        st.builds(Split, th, th),
        st.builds(CrossPos, th, th),
        st.builds(CrossNeg, th, th),
        st.builds(SolidDot, th),
        st.builds(OpenDot, th),
        st.builds(TraverseUp, th, st.sampled_from(["1", "q"])),
        st.builds(TraverseDown, th, st.sampled_from(["1", "q"])),
    )


terms = st.recursive(small_gens(), lambda inner: st.builds(lambda a, b: tensor(a, b), inner, inner), max_leaves=4)


@given(terms)
def test_sexpr_and_json_roundtrip(t):
    assert to_sexpr(parse_sexpr(to_sexpr(t))) == to_sexpr(t)
    assert to_sexpr(from_json(to_json(t))) == to_sexpr(t)


@given(terms)
def test_transpose_swaps_boundary(t):
    f = transpose(t)
    assert (f.source, f.target) == (t.target, t.source)
    assert to_sexpr(transpose(f)) == to_sexpr(t)


def test_generator_boundaries():
    assert Merge(1, 2).source == (1, 2) and Merge(1, 2).target == (3,)
    assert Split(1, 2).target == (1, 2)
    assert CrossPos(1, 2).target == (2, 1)
    assert TraverseUp(2, "q").source == (2, Red("q"))
    assert TraverseDown(2, "q").target == (2, Red("q"))


@pytest.mark.parametrize("bad", [lambda: Merge(0, 1), lambda: SolidDot(0), lambda: Split(1, -1)])
def test_bad_thickness(bad):
    with pytest.raises(DiagramError):
        bad()


def test_validate_reports_mismatch():
    assert validate(compose(Merge(1, 1), Split(1, 1))) == ((2,), (2,))
    with pytest.raises(DiagramError, match="boundary mismatch"):
        validate(compose(Merge(1, 1), Merge(1, 1)))
    with pytest.raises(DiagramError):
        validate(LinearCombination(()))


def test_slices_cover_every_generator():
    t = compose(Merge(1, 1), tensor(SolidDot(1), Identity((1,))), Split(1, 1))
    sl = slices(t)
    assert [s.gen.kind for s in sl] == ["split", "dot", "merge"]
    assert sl[1].offset == 0


def test_degrees():
    assert degrees(CrossPos(2, 3)).crossing_degree == 5
    assert degrees(tensor(CrossNeg(1, 1), TraverseDown(2, "q"))).dot_degree == 2
    assert degrees(omega(3, 2)).dot_degree == 2
    assert degrees(omega_packet(2, (1, -1))).dot_degree == 2


def test_omega_range():
    assert omega(2, 0) == Identity((2,))
    assert omega(2, 2) == SolidDot(2)
    assert omega(2, -2) == OpenDot(2)
    with pytest.raises(DiagramError):
        omega(2, 3)


def test_lincomb_scalars():
    lc = lincomb(("q", Merge(1, 1)), (1, Merge(1, 1)))
    assert len(lc) == 2
    assert lc.source == (1, 1)
    assert lc.scale(2).terms[0][0] == lc.terms[0][0] * 2


def test_g_diagram_boundary():
    g = g_diagram(2, ["1", "q"])
    assert validate(g) == ((2,), (2,))


@pytest.mark.parametrize("lam,mu", [((2,), (1, 1)), ((1, 1), (2,)), ((2, 1), (1, 2))])
def test_elaborate_boundary(lam, mu):
    for lab in enumerate_basis_labels(RPARMAT, mu, lam, dot_bound=1):
        t = elaborate(ElementaryRibbon(lam, mu, lab))
        assert validate(t) == (lam, mu)


def test_sst_ribbon():
    lam = MultiComposition.cyclotomic((2,), (1,))
    nu = MultiComposition.cyclotomic((1,), (2,))
    for T in enumerate_sst(lam, nu):
        r = sst_to_ribbon(T, lam, nu, ("1", "q"))
        src, tgt = validate(elaborate(r))
        assert sum(x for x in src if not isinstance(x, Red)) == 3
        assert [x for x in tgt if isinstance(x, Red)] == [Red("1"), Red("q")]
    with pytest.raises(DiagramError):
        sst_to_ribbon(enumerate_sst(lam, lam)[0], lam, nu, ("1", "q"))
