"""Acceptance criteria 1-12.

Each test is one criterion; conftest prints a PASS/FAIL line per criterion
at the end of the session.  Run alone with

    pytest tests/test_acceptance.py -v
"""

import math
import random
import time

import pytest

from qschur import cycschur, hecke, polyrep
from qschur.combinat import (
    PARMAT_ELL,
    PARMAT_FLAT,
    compositions,
    enumerate_basis_labels,
    enumerate_matrices,
    enumerate_objects,
    enumerate_sst,
    multipartitions,
    rational_partitions,
)
from qschur.diagram import compose, omega_packet, validate
from qschur.ring import IntLaurent, MultiLaurent, q_factorial

LEVEL_US = {1: ("1",), 2: ("1", "q")}

DEFINING = (
    "webassoc",
    "mergesplit",
    "splitbinomial",
    "dotmovecrossing",
    "dotmovesplits+merge",
    "intergralballon",
    "crossinverse",
    "dotinverse",
    "redslider",
    "redcross2",
    "redbraid",
)

DERIVED = (
    "squareswitch",
    "squareswitch2",
    "sliders",
    "unfold",
    "cross via square",
    "cross2",
    "braid",
    "Hecke",
    "rightdot",
    "dots2strands",
    "splitmerge",
    "dotmovesplitabr",
    "dotcommutative",
    "cross+=-",
    "wrdotcross",
    "adamovecrossings",
    "dotmoveadaptor",
    "balloon",
)

PROBE_LIMIT = 32


def _run_suite(names, max_thickness):
    failures, reports = [], []
    for name in names:
        for p in polyrep.relation_instances(name, max_thickness):
            rep = polyrep.verify_relation_report(name, limit=PROBE_LIMIT, **p)
            reports.append(rep)
            if not rep.passed:
                failures.append((name, p, rep.witness))
    return failures, reports


CRITERIA = {
    1: "affine relation suite",
    2: "derived relation suite",
    3: "thick-dot identity",
    4: "affine basis independence",
    5: "ParMat-flat counting identity",
    6: "cyclotomic Hecke sanity",
    7: "DJM cellular dimension",
    8: "isomorphism G on double SST basis",
    9: "cyclotomic vanishing",
    10: "level-1 collapse",
    11: "structure constants cross-check",
    12: "End(1_a) commutative",
}


def test_criterion_01():
    t0 = time.perf_counter()
    failures, reports = _run_suite(DEFINING, 3)
    elapsed = time.perf_counter() - t0
    assert not failures, failures[:5]
    for rep in reports:
        # a complete probe set is a proof; otherwise at least three probes
        src, _ = validate(polyrep.relation_sides(rep.relation, **rep.params)[0][0])
        assert rep.probes >= min(3, polyrep.generator_count(src))
    assert elapsed <= 300, f"suite took {elapsed:.0f}s"


def test_criterion_02():
    failures, reports = _run_suite(DERIVED, 3)
    assert not failures, failures[:5]
    assert {r.relation for r in reports} == set(DERIVED)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_criterion_03(a):
    name = "intergralballon"
    for lhs, rhs in polyrep.relation_sides(name, a=a):
        assert rhs.terms[0][0] == q_factorial(a)
        assert polyrep.equals(lhs, rhs)


def test_criterion_04():
    for m in (1, 2, 3):
        for lam in compositions(m):
            for mu in compositions(m):
                for bound in (0, 1, 2):
                    r, n = polyrep.basis_rank(mu, lam, bound)
                    assert r == n, (mu, lam, bound, r, n)


def test_criterion_05():
    for ell in (1, 2):
        for m in (1, 2, 3, 4):
            objs = enumerate_objects(m, ell, empty_zero=True)
            lams = multipartitions(m, ell)
            sst = {(lam, mu): len(enumerate_sst(lam, mu)) for lam in lams for mu in objs}
            for mu in objs:
                for nu in objs:
                    lhs = len(enumerate_basis_labels(PARMAT_FLAT, nu, mu))
                    assert lhs == sum(sst[(lam, nu)] * sst[(lam, mu)] for lam in lams), (mu, nu)


def _random_letters(rng, m, n):
    out = []
    for _ in range(n):
        k = rng.randrange(3)
        if k == 0 and m > 1:
            out.append(("H", rng.randrange(1, m)))
        elif k == 1 and m > 1:
            out.append(("Hinv", rng.randrange(1, m)))
        else:
            out.append(("X", rng.randrange(1, m + 1), rng.randrange(0, 3)))
    return out


@pytest.mark.parametrize("ell,m", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_criterion_06(ell, m):
    us = ("1", "q", "2")[:ell]
    ctx = hecke.AKContext(m, us)
    syms = ctx.symbols()
    assert len(set(syms)) == ell**m * math.factorial(m) == ctx.dimension
    allowed = set(syms)
    for s in syms:
        el = hecke.AKElement(ctx, {s: IntLaurent.const(1)})
        for i in range(1, m):
            assert set((ctx.H(i) * el).terms) <= allowed
        for j in range(1, m + 1):
            assert set((ctx.X(j) * el).terms) <= allowed
    # commutation rules against the polynomial module of the affine algebra
    aff = hecke.AKContext(m, affine=True)
    rng = random.Random(ell * 10 + m)
    f = MultiLaurent.monomial([rng.randrange(-2, 3) for _ in range(m)]) + MultiLaurent.one(m)
    for _ in range(20):
        w1, w2 = _random_letters(rng, m, 4), _random_letters(rng, m, 4)
        a, b = aff.word(w1), aff.word(w2)
        assert (a * b).act(f) == a.act(b.act(f))
        assert ctx.reduce(a * b) == ctx.word(w1) * ctx.word(w2)


def test_criterion_07():
    for ell in (1, 2):
        for m in (1, 2, 3):
            ctx = cycschur._context(m, LEVEL_US[ell])
            basis = hecke.phi_basis(ctx, check=True)
            objs = enumerate_objects(m, ell, empty_zero=True)
            want = sum(
                len(enumerate_sst(lam, mu)) * len(enumerate_sst(lam, nu)) for lam in multipartitions(m, ell) for mu in objs for nu in objs
            )
            assert len(basis) == want
            assert all(c == r for c, r in hecke.phi_independence(ctx, basis).values())
    assert len(hecke.phi_basis(cycschur._context(2, ("1",)))) == 5


def test_criterion_08():
    for ell in (1, 2):
        for m in (1, 2, 3):
            ctx = cycschur._context(m, LEVEL_US[ell])
            pairs = cycschur.double_sst_basis(ctx, check=False)
            cell = {(e.S, e.T): e.hom for e in hecke.phi_basis(ctx, balanced=True)}
            assert len(pairs) == len(cell)
            # change of basis: every G-image is exactly one cellular element
            for (S, T), f in pairs:
                assert f.hom.image == cell[(T, S)].image, (S, T)
                assert (f.source, f.target) == (cell[(T, S)].source, cell[(T, S)].target)


def test_criterion_09():
    for ell in (1, 2):
        for us in (LEVEL_US[ell], ("2", "3")[:ell]):
            for r in (1, 2, 3):
                ctx = cycschur._context(r, us)
                for i in range(1, ell + 1):
                    h = cycschur.cycpolyvanish(ctx, r, i)
                    assert h.is_zero(), (us, r, i)


def test_criterion_10():
    for m in (1, 2, 3, 4):
        ctx = cycschur._context(m, ("1",))
        for lam in compositions(m):
            for mu in compositions(m):
                basis = cycschur.cyc_hom_basis(ctx, mu, lam, PARMAT_ELL)
                assert len(basis) == len(enumerate_matrices(lam, mu))
                assert len(basis) == len(enumerate_basis_labels(PARMAT_ELL, lam, mu, ell=1))


def _hecke_table(ctx, homs):
    index = {s: k for k, s in enumerate(ctx.symbols())}
    table = {}
    for x, f in enumerate(homs):
        for y, g in enumerate(homs):
            if g.target != f.source:
                continue
            fg = hecke.compose_hom(f, g)
            ks = [k for k, h in enumerate(homs) if (h.source, h.target) == (g.source, f.target)]
            rows = {}
            for col, k in enumerate(ks):
                for i, v in homs[k].image.vector(index).items():
                    rows.setdefault(i, {})[col] = v
            sol = hecke.solve_any(rows, fg.image.vector(index), len(ks)) if fg.image.terms else {}
            table[(x, y)] = {ks[c]: v for c, v in sol.items()}
    return table


@pytest.mark.parametrize("ell", [1, 2])
def test_criterion_11(ell):
    ctx = cycschur._context(2, LEVEL_US[ell])
    pairs = cycschur.double_sst_basis(ctx)
    diag = cycschur.structure_constants(ctx, pairs)
    # Hecke side: phi_{TS} in the same order, composed in the DJM algebra
    cell = {(e.T, e.S): e.hom for e in hecke.phi_basis(ctx, balanced=True)}
    homs = [cell[(S, T)] for (S, T), _ in pairs]
    table = _hecke_table(ctx, homs)
    assert diag.keys() == table.keys()
    for key in table:
        assert diag[key] == table[key], key


@pytest.mark.parametrize("a", [1, 2])
def test_criterion_12(a):
    imgs = polyrep.end_one_images(a, 3)
    assert len(imgs) == len(rational_partitions(a, 3))
    leads = [f.leading_monomial() for f in imgs.values()]
    assert len(set(leads)) == len(leads)
    nus = list(imgs)
    for i, x in enumerate(nus):
        for y in nus[i + 1 :]:
            xy = compose(omega_packet(a, x), omega_packet(a, y))
            yx = compose(omega_packet(a, y), omega_packet(a, x))
            assert polyrep.equals(xy, yx), (x, y)
    assert imgs[()] == MultiLaurent.one(a)
