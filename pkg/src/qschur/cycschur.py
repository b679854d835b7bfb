"""Cyclotomic quotients through the functor G to DJM homomorphisms.

G sends a diagram with bottom mu to the homomorphism M^mu -> M^target,
m_mu h -> E m_mu h, where E is the product of the slice elements (top
slice leftmost).  Merges act by sigma_{a,b}, crossings by H_w, dots by
products of X's and traverse-downs by prod (X_j - u).  Splits and
traverse-ups are inclusions.  Any diagram passing through an object with
black strands left of the first red strand maps to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinat import (
    PARMAT_ELL,
    PARMAT_FLAT,
    MultiComposition,
    MultiTableau,
    enumerate_basis_labels,
    enumerate_objects,
    enumerate_sst,
    longest_coset_rep,
    min_coset_reps,
    multipartitions,
)
from .diagram import (
    Compose,
    DiagramError,
    ElementaryRibbon,
    Identity,
    LinearCombination,
    Red,
    Term,
    elaborate,
    g_diagram,
    slices,
    sst_to_ribbon,
    strands_of,
    transpose,
)
from .hecke import (
    AKContext,
    AKElement,
    HeckeError,
    HomMap,
    _accumulate,
    _norm,
    compose_hom,
    hom_dimensions,
    m_lambda,
    cellular_image,
    m_st,
    phi_basis,
    vector_rank,
)
from .ring import ONE, IntLaurent, q_pow, scalar


class CycError(ValueError):
    pass


def object_to_multicomposition(obj: Sequence, us: Sequence) -> MultiComposition | None:
    """Multicomposition of a strand object, None when black strands precede the first red.

    Raises when the red strands are not u_1, ..., u_ell in order.
    """
    comps: list = [[]]
    reds = []
    for x in obj:
        if isinstance(x, Red):
            reds.append(x.u)
            comps.append([])
        else:
            comps[-1].append(x)
    want = [Red(u).u for u in us]
    if reds != want:
        raise CycError(f"red strands {reds} differ from the parameters {want}")
    if comps[0]:
        return None
    return MultiComposition(tuple(tuple(c) for c in comps))


def mc_to_object(mu: MultiComposition, us: Sequence) -> tuple:
    return strands_of(mu, us)


# ---------------------------------------------------------------------------
# slice elements


def _lmul_word(ctx: AKContext, word, off: int, t: dict) -> dict:
    for i in reversed(tuple(word)):
        t = ctx._lmul_h(i + off, t)
    return t


def _slice_action(ctx: AKContext, gen, off: int, t: dict) -> dict:
    k = gen.kind
    if k in ("split", "tup"):
        return t
    if k == "merge":
        out: dict = {}
        for _, length, word in min_coset_reps(gen.a, gen.b):
            _accumulate(out, _lmul_word(ctx, word, off, t), q_pow(gen.a * gen.b - length))
        return out
    if k == "crosspos":
        return _lmul_word(ctx, longest_coset_rep(gen.a, gen.b)[2], off, t)
    if k == "crossneg":
        for i in longest_coset_rep(gen.b, gen.a)[2]:
            t = ctx._lmul_hinv(i + off, t)
        return t
    if k in ("dot", "opendot"):
        for j in range(off + 1, off + gen.a + 1):
            t = ctx._lmul_x(j, t) if k == "dot" else ctx._lmul_xinv(j, t)
        return t
    if k == "tdown":
        u = gen.u
        for j in range(off + 1, off + gen.a + 1):
            nxt = ctx._lmul_x(j, t)
            _accumulate(nxt, t, _norm(-u) if not isinstance(u, int) else IntLaurent.const(-u))
            t = nxt
        return t
    raise CycError(f"unknown generator {k}")


def _term_element(ctx: AKContext, term: Term, start: dict) -> dict | None:
    """E . start for a single term, None when it factors through a zero object."""
    sl = slices(term)
    for s in sl:
        if object_to_multicomposition(s.source, ctx.us) is None:
            return None
    if sl and object_to_multicomposition(sl[-1].target, ctx.us) is None:
        return None
    t = start
    for s in sl:
        t = _slice_action(ctx, s.gen, s.offset, t)
        if not t:
            break
    return t


def apply_G(op, ctx: AKContext) -> HomMap:
    """The DJM homomorphism of a diagram or linear combination of diagrams."""
    lc = LinearCombination.of(op)
    if not lc.terms:
        raise CycError("cannot infer boundaries of an empty combination")
    src, tgt = lc.terms[0][1].source, lc.terms[0][1].target
    mu = object_to_multicomposition(src, ctx.us)
    nu = object_to_multicomposition(tgt, ctx.us)
    if mu is None or nu is None:
        return HomMap(ctx, mu, nu, ctx.zero())
    if sum(map(sum, mu.components)) != ctx.m:
        raise CycError(f"object {mu} has weight different from {ctx.m}")
    gen = m_lambda(ctx, mu).terms
    out: dict = {}
    for c, term in lc.terms:
        if term.source != src or term.target != tgt:
            raise DiagramError("boundary mismatch in linear combination")
        img = _term_element(ctx, term, gen)
        if img:
            _accumulate(out, img, scalar(c))
    return HomMap(ctx, mu, nu, AKElement(ctx, out))


# ---------------------------------------------------------------------------


@dataclass
class CycMorphism:
    source: MultiComposition
    target: MultiComposition
    hom: HomMap
    diagram: object = None

    def __eq__(self, other):
        return cyc_equals(self, other)


def cyc_morphism(op, ctx: AKContext) -> CycMorphism:
    h = apply_G(op, ctx)
    return CycMorphism(h.source, h.target, h, op)


def cyc_equals(f: CycMorphism, g: CycMorphism) -> bool:
    if (f.source, f.target) != (g.source, g.target):
        raise CycError(f"boundary mismatch: {f.source}->{f.target} vs {g.source}->{g.target}")
    return f.hom.image == g.hom.image


def double_sst_diagram(S: MultiTableau, T: MultiTableau, mu: MultiComposition, nu: MultiComposition, us: Sequence) -> Term:
    """[T] o [S]^flip : mu -> lam -> nu."""
    lam = S.shape
    if T.shape != lam:
        raise CycError("S and T have different shapes")
    bottom = transpose(elaborate(sst_to_ribbon(S, lam, mu, us)))
    top = elaborate(sst_to_ribbon(T, lam, nu, us))
    return Compose((top, bottom))


def double_sst_morphism(ctx: AKContext, S: MultiTableau, T: MultiTableau, mu: MultiComposition, nu: MultiComposition, check: bool = True) -> CycMorphism:
    """G([T] o [S]^flip), checked against the balanced cellular element phi'_{TS}: M^mu -> M^nu."""
    d = double_sst_diagram(S, T, mu, nu, ctx.us)
    f = cyc_morphism(d, ctx)
    if check:
        want = cellular_image(ctx, T, S, nu, mu, balanced=True)
        if f.hom.image != want:
            raise CycError(f"G([T][S]^flip) differs from the cellular element for S={S}, T={T}")
    return f


def double_sst_basis(ctx: AKContext, objects=None, check: bool = True) -> list:
    objs = list(objects) if objects is not None else enumerate_objects(ctx.m, ctx.ell, empty_zero=True)
    out = []
    for lam in multipartitions(ctx.m, ctx.ell):
        ssts = {mu: enumerate_sst(lam, mu) for mu in objs}
        for mu in objs:
            for S in ssts[mu]:
                for nu in objs:
                    for T in ssts[nu]:
                        out.append(((S, T), double_sst_morphism(ctx, S, T, mu, nu, check=check)))
    return out


def cyc_hom_basis(ctx: AKContext, mu, nu, kind: str = PARMAT_FLAT) -> list:
    """ParMat-flat (multicomposition objects) or ParMat-ell (web objects) basis of Hom(mu, nu)."""
    if kind == PARMAT_FLAT:
        src, tgt = mu, nu
        labels = enumerate_basis_labels(PARMAT_FLAT, nu, mu)
    elif kind == PARMAT_ELL:
        src = MultiComposition(((),) * ctx.ell + (tuple(mu),))
        tgt = MultiComposition(((),) * ctx.ell + (tuple(nu),))
        labels = enumerate_basis_labels(PARMAT_ELL, tuple(nu), tuple(mu), ell=ctx.ell)
    else:
        raise CycError(f"unknown label kind {kind!r}")
    out = []
    for lab in labels:
        rib = ElementaryRibbon(src, tgt, lab, ctx.us)
        out.append((lab, cyc_morphism(elaborate(rib), ctx)))
    index = {s: k for k, s in enumerate(ctx.symbols())}
    r = vector_rank([f.hom.image.vector(index) for _, f in out])
    if r != len(out):
        raise CycError(f"basis images are dependent: rank {r} < {len(out)} for {mu} -> {nu}")
    dim = hom_dimensions(ctx, [src, tgt])[(src, tgt)]
    if dim != len(out):
        raise CycError(f"{len(out)} labels but Hom has dimension {dim}")
    return out


def g_vanishing_diagram(ctx: AKContext, r: int, i: int, tail: Sequence = ()) -> LinearCombination:
    """g_r(u_1)...g_r(u_i) on a thickness-r strand sitting right of u_1..u_i."""
    if not 1 <= i <= ctx.ell:
        raise CycError(f"i must lie in 1..{ctx.ell}")
    left = tuple(Red(u) for u in ctx.us[:i])
    right = tuple(Red(u) for u in ctx.us[i:]) + tuple(tail)
    return g_diagram(r, ctx.us[:i]).pad(left, right)


def cycpolyvanish(ctx: AKContext, r: int, i: int, tail: Sequence = ()) -> HomMap:
    """G of the g_{r,i} diagram; zero in the cyclotomic quotient."""
    return apply_G(g_vanishing_diagram(ctx, r, i, tail), ctx)


def structure_constants(ctx: AKContext, basis: Sequence | None = None) -> dict:
    """{(x, y): {z: coeff}} with b_x o b_y = sum coeff b_z over the double SST basis."""
    basis = list(basis) if basis is not None else double_sst_basis(ctx)
    return _structure(ctx, [f.hom for _, f in basis])


def _structure(ctx: AKContext, homs: Sequence[HomMap]) -> dict:
    from .hecke import solve_any

    index = {s: k for k, s in enumerate(ctx.symbols())}
    blocks: dict = {}
    for k, h in enumerate(homs):
        blocks.setdefault((h.source, h.target), []).append(k)
    table: dict = {}
    for x, f in enumerate(homs):
        for y, g in enumerate(homs):
            if g.target != f.source:
                continue
            fg = compose_hom(f, g)
            ks = blocks.get((g.source, f.target), [])
            rows: dict = {}
            for col, k in enumerate(ks):
                for i, v in homs[k].image.vector(index).items():
                    rows.setdefault(i, {})[col] = v
            sol = solve_any(rows, fg.image.vector(index), len(ks)) if fg.image.terms else {}
            table[(x, y)] = {ks[c]: v for c, v in sol.items()}
    return table


def relation_under_G(name: str, us: Sequence, red_index: int | None = None, **params) -> bool:
    """Check that both sides of a catalogued relation have the same image under G.

    The relation is placed right of the red strands u_1..u_{k-1} and left of
    u_{k+1}..u_ell, where k = red_index (1-based) names the red strand the
    relation itself uses; relations without a red strand sit right of all reds.
    """
    from .polyrep import relation_sides

    us = tuple(us)
    if "u" in (p := dict(params)) or red_index is not None:
        k = red_index if red_index is not None else len(us)
        p["u"] = us[k - 1]
        left = tuple(Red(u) for u in us[: k - 1])
        right = tuple(Red(u) for u in us[k:])
    else:
        left, right = tuple(Red(u) for u in us), ()
    for lhs, rhs in relation_sides(name, **p):
        if not any(isinstance(x, Red) for x in LinearCombination.of(lhs).source):
            left, right = tuple(Red(u) for u in us), ()
        L, R = LinearCombination.of(lhs).pad(left, right), LinearCombination.of(rhs).pad(left, right)
        m = sum(x for x in L.source if not isinstance(x, Red))
        ctx = _context(m, us)
        if apply_G(L, ctx).image != apply_G(R, ctx).image:
            return False
    return True


_CONTEXTS: dict = {}


def _context(m: int, us: Sequence) -> AKContext:
    key = (m, tuple(str(u) for u in us))
    if key not in _CONTEXTS:
        _CONTEXTS[key] = AKContext(m, us)
    return _CONTEXTS[key]
