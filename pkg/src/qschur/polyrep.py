"""Polynomial representation of the affine q-Schur category.

Objects act on Laurent polynomials in m variables that are symmetric within
each black strand's block of variables.  Generators act as follows, at the
block offset of the generator:

* split: inclusion;
* merge(a, b): the symmetrizer sigma_{a,b} = sum_d q^{ab - l(d)} H_d over
  minimal left coset representatives d of S_a x S_b;
* crossings: H_{w_{a,b}} and its inverse;
* dots: multiplication by (X_{s+1} ... X_{s+a})^{+-1};
* traverse-down: multiplication by prod (X_j - u); traverse-up: identity.

Equality of morphisms is decided by evaluating on generators of the source
module over the full symmetric Laurent ring (every image above is linear
over symmetric functions in all m variables).
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .combinat import (
    RPARMAT,
    compositions,
    enumerate_basis_labels,
    longest_coset_rep,
    min_coset_reps,
    partitions,
    word_to_perm,
)
from .diagram import (
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
    Term,
    TraverseDown,
    TraverseUp,
    black_weight,
    compose,
    degrees,
    elaborate,
    g_diagram,
    g_polynomial,
    lincomb,
    omega,
    pad,
    slices,
    split_chain,
    merge_chain,
    tensor,
    validate,
)
from .linalg import InconsistentSystem, SingularSystem, _poly_gcd, certified_rank, solve
from .ring import ONE, ZERO, IntLaurent, MultiLaurent, RatFunc, q_binom, q_factorial, q_int, q_pow, scalar

log = logging.getLogger(__name__)


class PolyRepError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Hecke action


def _apply_h(t: dict, i: int) -> dict:
    """H_i on the flat term dict (0-based position i, acting on i, i+1)."""
    out: dict = {}

    def add(key, v):
        s = out.get(key, 0) + v
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    j = i + 1
    for key, c in t.items():
        a, b, k = key[i], key[j], key[-1]
        base = list(key)
        if a == b:
            add(key[:-1] + (k - 1,), c)
            continue
        base[i], base[j] = b, a
        if a > b:
            base[-1] = k + 1
            add(tuple(base), c)
            for s in range(1, a - b):
                e = list(key)
                e[i], e[j] = a - s, b + s
                e[-1] = k + 1
                add(tuple(e), c)
                e[-1] = k - 1
                add(tuple(e), -c)
        else:
            base[-1] = k - 1
            add(tuple(base), c)
            for s in range(a, b):
                e = list(key)
                e[i], e[j] = s, a + b - s
                e[-1] = k - 1
                add(tuple(e), c)
                e[-1] = k + 1
                add(tuple(e), -c)
    return out


def _apply_hinv(t: dict, i: int) -> dict:
    """H_i^{-1} = H_i + q - q^{-1}."""
    out = _apply_h(t, i)
    for key, c in t.items():
        for dk, sign in ((1, 1), (-1, -1)):
            nk = key[:-1] + (key[-1] + dk,)
            s = out.get(nk, 0) + sign * c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
    return out


def hecke_action(f: MultiLaurent, word: Sequence[int]) -> MultiLaurent:
    """H_{w_1} H_{w_2} ... H_{w_k} . f; negative entries mean H_i^{-1}.

    The right-most generator acts first, so a reduced word of w gives H_w.
    """
    t = f._t
    for g in reversed(tuple(word)):
        i = abs(g)
        if not 1 <= i < f.m:
            raise PolyRepError(f"generator index {g} out of range for {f.m} variables")
        t = _apply_h(t, i - 1) if g > 0 else _apply_hinv(t, i - 1)
    return MultiLaurent._raw(f.m, t)


# ---------------------------------------------------------------------------
# generator images


@lru_cache(maxsize=None)
def _sigma_plan(a: int, b: int) -> tuple:
    """((word, prefix_index, q_exponent), ...) ordered by length.

    Entry k is reached from entry prefix_index by one left multiplication by
    H_{word[0]}.
    """
    reps = min_coset_reps(a, b)
    index = {perm: k for k, (perm, _, _) in enumerate(reps)}
    plan = []
    for perm, length, word in reps:
        if not word:
            plan.append(((), -1, a * b))
            continue
        prev = word_to_perm(word[1:], a + b)
        plan.append((word, index[prev], a * b - length))
    return tuple(plan)


@lru_cache(maxsize=None)
def _cross_word(a: int, b: int) -> tuple:
    return tuple(longest_coset_rep(a, b)[2])


def _merge_action(t: dict, a: int, b: int, off: int) -> dict:
    plan = _sigma_plan(a, b)
    images = []
    out: dict = {}
    for word, prev, qe in plan:
        g = t if prev < 0 else _apply_h(images[prev], word[0] + off - 1)
        images.append(g)
        for key, c in g.items():
            nk = key[:-1] + (key[-1] + qe,)
            s = out.get(nk, 0) + c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
    return out


def _dot_action(t: dict, a: int, off: int, sign: int) -> dict:
    out = {}
    for key, c in t.items():
        e = list(key)
        for j in range(off, off + a):
            e[j] += sign
        out[tuple(e)] = c
    return out


def _traverse_down(t: dict, a: int, off: int, u: IntLaurent) -> dict:
    cur = t
    for j in range(off, off + a):
        nxt: dict = {}
        for key, c in cur.items():
            e = list(key)
            e[j] += 1
            k = tuple(e)
            nxt[k] = nxt.get(k, 0) + c
            for ue, uv in u.items():
                k2 = key[:-1] + (key[-1] + ue,)
                nxt[k2] = nxt.get(k2, 0) - c * uv
        cur = {k: v for k, v in nxt.items() if v}
    return cur


def _laurent_param(u) -> IntLaurent:
    if isinstance(u, RatFunc):
        s = u.simplify()
        if isinstance(s, RatFunc):
            raise PolyRepError("the polynomial representation needs Laurent red parameters")
        return s
    return IntLaurent.coerce(u)


def apply_slice(t: dict, gen, off: int) -> dict:
    k = gen.kind
    if k == "split" or k == "tup":
        return t
    if k == "merge":
        return _merge_action(t, gen.a, gen.b, off)
    if k == "crosspos":
        for i in reversed(_cross_word(gen.a, gen.b)):
            t = _apply_h(t, i + off - 1)
        return t
    if k == "crossneg":
        # inverse of crosspos(b, a): reversed word, inverted generators
        for i in _cross_word(gen.b, gen.a):
            t = _apply_hinv(t, i + off - 1)
        return t
    if k == "dot":
        return _dot_action(t, gen.a, off, 1)
    if k == "opendot":
        return _dot_action(t, gen.a, off, -1)
    if k == "tdown":
        return _traverse_down(t, gen.a, off, _laurent_param(gen.u))
    raise PolyRepError(f"unknown generator {k}")


# ---------------------------------------------------------------------------
# operator handles


def block_windows(obj: Sequence) -> list:
    """1-based variable ranges of the black strands of an object."""
    out, s = [], 0
    for x in obj:
        if isinstance(x, Red):
            continue
        out.append(range(s + 1, s + x + 1))
        s += x
    return out


def _clear_denominators(lc: LinearCombination) -> tuple:
    """(D, [(Laurent coeff, term)]) with lc = (1/D) * sum."""
    D = ONE
    for c, _ in lc.terms:
        if isinstance(c, RatFunc) and not c.den.is_unit():
            g = _poly_gcd(D, c.den)
            D = D * c.den.exact_div(g)
    out = []
    for c, t in lc.terms:
        x = RatFunc(c) * RatFunc(D) if not isinstance(c, RatFunc) else c * RatFunc(D)
        x = x.simplify()
        if isinstance(x, RatFunc):
            (k, s), = x.den.items()
            x = x.num.shift(-k) * s
        out.append((x, t))
    return D, out


@dataclass
class OperatorHandle:
    """A validated term or linear combination with its block structure."""

    term: object
    source: tuple = field(init=False)
    target: tuple = field(init=False)

    def __post_init__(self):
        if isinstance(self.term, OperatorHandle):
            self.term = self.term.term
        self.source, self.target = validate(self.term)
        if black_weight(self.source) != black_weight(self.target):
            raise PolyRepError("source and target have different weight")
        lc = LinearCombination.of(self.term)
        self.denominator, terms = _clear_denominators(lc)
        self._plans = [(c, [(s.offset, s.gen) for s in slices(t)]) for c, t in terms]

    @property
    def m(self) -> int:
        return black_weight(self.source)

    @property
    def source_windows(self) -> list:
        return block_windows(self.source)

    @property
    def target_windows(self) -> list:
        return block_windows(self.target)

    def apply_numerator(self, f: MultiLaurent) -> MultiLaurent:
        """D * F(term)(f) where D is `denominator` (1 for Laurent scalars)."""
        total: dict = {}
        for c, plan in self._plans:
            t = f._t
            for off, gen in plan:
                t = apply_slice(t, gen, off)
            img = MultiLaurent._raw(f.m, t).scale(c)
            for k, v in img._t.items():
                s = total.get(k, 0) + v
                if s:
                    total[k] = s
                else:
                    total.pop(k, None)
        return MultiLaurent._raw(f.m, total)


def _handle(op) -> OperatorHandle:
    return op if isinstance(op, OperatorHandle) else OperatorHandle(op)


def evaluate(op, f: MultiLaurent, check: bool = True) -> MultiLaurent:
    """Image of f under the polynomial representation of op.

    For linear combinations with non-Laurent scalars use `apply_numerator`
    on the handle; this function requires the common denominator to be 1.
    """
    h = _handle(op)
    if f.m != h.m:
        raise PolyRepError(f"polynomial has {f.m} variables, object has weight {h.m}")
    if check:
        for w in h.source_windows:
            if not f.is_symmetric_in(w):
                raise PolyRepError(f"input not in Sym_mu: not symmetric in variables {w.start}..{w.stop - 1}")
    if h.denominator != ONE:
        raise PolyRepError("term has non-Laurent coefficients; use apply_numerator")
    return h.apply_numerator(f)


def is_block_symmetric(f: MultiLaurent, obj: Sequence) -> bool:
    return all(f.is_symmetric_in(w) for w in block_windows(obj))


# ---------------------------------------------------------------------------
# probes


def _monomial_symmetric(m: int, window: range, lam: tuple) -> MultiLaurent:
    """m_lam in the variables of window (lam padded with zeros)."""
    n = len(window)
    exps = tuple(lam) + (0,) * (n - len(lam))
    terms = {}
    for perm in set(itertools.permutations(exps)):
        e = [0] * m
        for j, x in zip(window, perm):
            e[j - 1] = x
        terms[tuple(e)] = 1
    return MultiLaurent(m, terms)


@dataclass
class ProbeSet:
    """Polynomials in Sym_mu used to compare operators.

    With complete=True they generate Sym_mu over the symmetric Laurent
    ring in all variables, so two operators agree iff they agree here.
    """

    m: int
    obj: tuple
    monomials: list
    complete: bool

    def __len__(self):
        return len(self.monomials)


def generator_count(obj: Sequence) -> int:
    parts = [x for x in obj if not isinstance(x, Red)]
    n = sum(parts)
    c = math.factorial(n)
    for p in parts:
        c //= math.factorial(p)
    return c


def _box_partitions(rows: int, cols: int):
    for k in range(rows * cols + 1):
        for lam in partitions(k, max_part=cols, max_len=rows):
            yield tuple(lam)


def _block_generators(parts: Sequence[int]):
    """Exponent patterns of the module generators, block by block."""
    later = [sum(parts[k + 1 :]) for k in range(len(parts))]
    return itertools.product(*[list(_box_partitions(p, later[k])) for k, p in enumerate(parts)])


def probe_set(obj: Sequence, limit: int | None = None, seed: int = 0) -> ProbeSet:
    """Generator probes of Sym_mu for the black strands of obj.

    If there are more than `limit` generators a seeded random subset of
    size `limit` is drawn from the low-degree generators (always including
    1) and the set is marked incomplete.
    """
    obj = tuple(obj)
    parts = [x for x in obj if not isinstance(x, Red)]
    m = sum(parts)
    windows = block_windows(obj)
    total = generator_count(obj)
    if limit is None or total <= limit:
        chosen = list(_block_generators(parts))
        complete = True
    else:
        allg = sorted(_block_generators(parts), key=lambda g: (sum(map(sum, g)), g))
        rng = random.Random(seed)
        pool = allg[1 : 2 * limit]
        chosen = [allg[0]] + sorted(rng.sample(pool, min(max(limit - 1, 0), len(pool))))
        complete = False
    probes = []
    for pattern in chosen:
        f = MultiLaurent.one(m)
        for w, lam in zip(windows, pattern):
            if any(lam):
                f = f * _monomial_symmetric(m, w, lam)
        probes.append(f)
    return ProbeSet(m, obj, probes, complete)


# ---------------------------------------------------------------------------
# equality and expansion


@dataclass
class EqualityCertificate:
    equal: bool
    probes: int
    complete: bool
    witness: object = None


def compare(t1, t2, limit: int | None = None, seed: int = 0) -> EqualityCertificate:
    h1, h2 = _handle(t1), _handle(t2)
    if (h1.source, h1.target) != (h2.source, h2.target):
        raise DiagramError(
            f"boundary mismatch: {h1.source}->{h1.target} vs {h2.source}->{h2.target}"
        )
    ps = probe_set(h1.source, limit=limit, seed=seed)
    for f in ps.monomials:
        a = h1.apply_numerator(f).scale(h2.denominator)
        b = h2.apply_numerator(f).scale(h1.denominator)
        if a != b:
            return EqualityCertificate(False, len(ps), ps.complete, str(f))
    return EqualityCertificate(True, len(ps), ps.complete)


def equals(t1, t2, limit: int | None = None, seed: int = 0) -> bool:
    """Decide t1 == t2 (complete unless `limit` truncates the probe set)."""
    return compare(t1, t2, limit=limit, seed=seed).equal


class BoundExceeded(PolyRepError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def basis_ribbons(source: Sequence, target: Sequence, dot_bound: int) -> list:
    """Elementary ribbons for RParMat labels of Hom(source, target)."""
    labels = enumerate_basis_labels(RPARMAT, tuple(target), tuple(source), dot_bound=dot_bound)
    return [ElementaryRibbon(tuple(source), tuple(target), L) for L in labels]


def _coefficient_rows(images: list, rhs_images: list) -> tuple:
    """Flatten probe images into sparse equations keyed by (probe, monomial)."""
    keys: dict = {}
    rows: list = []
    rhs: list = []

    def row_of(pk):
        if pk not in keys:
            keys[pk] = len(rows)
            rows.append({})
            rhs.append(ZERO)
        return keys[pk]

    for j, per_probe in enumerate(images):
        for p, poly in enumerate(per_probe):
            for e, c in poly.terms.items():
                rows[row_of((p, e))][j] = c
    for p, poly in enumerate(rhs_images):
        for e, c in poly.terms.items():
            rhs[row_of((p, e))] = c
    return rows, rhs


def evaluation_matrix(source, target, dot_bound: int, limit: int | None = None, seed: int = 0):
    ribbons = basis_ribbons(source, target, dot_bound)
    ps = probe_set(source, limit=limit, seed=seed)
    images = []
    for r in ribbons:
        h = OperatorHandle(elaborate(r))
        images.append([h.apply_numerator(f) for f in ps.monomials])
    rows, _ = _coefficient_rows(images, [])
    return ribbons, ps, rows


def basis_rank(source, target, dot_bound: int) -> tuple[int, int]:
    """(certified column rank, number of labels) of the probe evaluation matrix."""
    ribbons, _, rows = evaluation_matrix(source, target, dot_bound)
    r, _ = certified_rank(rows, len(ribbons))
    return r, len(ribbons)


MAX_DOT_BOUND = 8


def expand_in_basis(op, dot_bound: int | None = None, hard_cap: int = MAX_DOT_BOUND, seed: int = 0) -> dict:
    """Coefficients of op in the elementary ribbon basis (RParMat labels).

    Returns {BasisLabel: scalar} with zero coefficients dropped.  The probe
    set is the complete generator set, so the solve is exact; if the op
    needs dots beyond the bound, the bound grows until `hard_cap`.
    """
    h = _handle(op)
    if any(isinstance(x, Red) for x in h.source + h.target):
        raise PolyRepError("expand_in_basis supports black objects only")
    bound = degrees_of(h.term) if dot_bound is None else dot_bound
    ps = probe_set(h.source)
    rhs_images = [h.apply_numerator(f) for f in ps.monomials]
    last = None
    while bound <= hard_cap:
        ribbons = basis_ribbons(h.source, h.target, bound)
        images = []
        for r in ribbons:
            hr = OperatorHandle(elaborate(r))
            images.append([hr.apply_numerator(f) for f in ps.monomials])
        rows, rhs = _coefficient_rows(images, rhs_images)
        try:
            sol = solve(rows, rhs, len(ribbons), seed=seed + 1)
        except InconsistentSystem as e:
            last = e.witness
            bound += 1
            continue
        out = {}
        for r, v in zip(ribbons, sol.values):
            if v:
                out[r.label] = _normalize(RatFunc(v) / RatFunc(h.denominator) if h.denominator != ONE else v)
        return out
    raise BoundExceeded(f"bound exceeded: no expansion with dot degree <= {hard_cap}", witness=last)


def _normalize(x):
    if isinstance(x, RatFunc):
        s = x.simplify()
        if isinstance(s, RatFunc) and s.den.is_unit():
            (k, c), = s.den.items()
            return s.num.shift(-k) * c
        return s
    return x


def degrees_of(term) -> int:
    if isinstance(term, LinearCombination):
        return max((degrees(t).dot_degree for _, t in term.terms), default=0)
    return degrees(term).dot_degree


# ---------------------------------------------------------------------------
# relation catalog


def _pos(*xs):
    return tuple(x for x in xs if x)


def _split(a, b) -> Term:
    if not a or not b:
        return Identity(_pos(a, b))
    return Split(a, b)


def _merge(a, b) -> Term:
    if not a or not b:
        return Identity(_pos(a, b))
    return Merge(a, b)


def _cross(a, b, neg=False) -> Term:
    if not a or not b:
        return Identity(_pos(a, b))
    return CrossNeg(a, b) if neg else CrossPos(a, b)


def _id(*xs) -> Term:
    return Identity(tuple(x for x in xs if not (isinstance(x, int) and x == 0)))


def _tup(a, u) -> Term:
    return TraverseUp(a, u) if a else Identity((Red(u),))


def _tdown(a, u) -> Term:
    return TraverseDown(a, u) if a else Identity((Red(u),))


def _sd(a) -> Term:
    return SolidDot(a) if a else Identity(())


def ladder(a: int, b: int, s: int) -> Term:
    """Square (a, b) -> (b, a) that moves a - s strands rightwards over merges and splits."""
    return compose(
        tensor(_merge(s, b - s), _id(a)),
        tensor(_id(s), _split(b - s, a)),
        tensor(_id(s), _merge(a - s, b)),
        tensor(_split(s, a - s), _id(b)),
    )


def mergesplit_rhs(a, b, c, d) -> LinearCombination:
    terms = []
    for s in range(0, min(a, b) + 1):
        t = s + d - a
        if not (0 <= t <= min(c, d)):
            continue
        term = compose(
            tensor(_merge(s, c - t), _merge(a - s, t)),
            tensor(_id(s), _cross(a - s, c - t), _id(t)),
            tensor(_split(s, a - s), _split(c - t, t)),
        )
        terms.append((q_pow(s * t), term))
    return LinearCombination(tuple(terms))


def _lc(*pairs) -> LinearCombination:
    return LinearCombination(tuple((scalar(c), t) for c, t in pairs))


def _rel_webassoc(a, b, c):
    yield (
        compose(Merge(a + b, c), tensor(Merge(a, b), _id(c))),
        compose(Merge(a, b + c), tensor(_id(a), Merge(b, c))),
    )
    yield (
        compose(tensor(Split(a, b), _id(c)), Split(a + b, c)),
        compose(tensor(_id(a), Split(b, c)), Split(a, b + c)),
    )


def _rel_mergesplit(a, b, c, d=None):
    if d is None:
        d = a + c - b
    if d < 1 or a + c != b + d:
        raise PolyRepError("mergesplit needs a + c = b + d with all thicknesses positive")
    yield compose(Split(b, d), Merge(a, c)), mergesplit_rhs(a, b, c, d)


def _rel_splitbinomial(a, b):
    yield compose(Merge(a, b), Split(a, b)), _lc((q_binom(a + b, a), _id(a + b)))


def _rel_dotmovecrossing(a, b):
    # a dot passes through the over strand; the crossing changes sign
    yield compose(CrossPos(a, b), tensor(SolidDot(a), _id(b))), compose(tensor(_id(b), SolidDot(a)), CrossNeg(a, b))
    yield compose(tensor(SolidDot(b), _id(a)), CrossPos(a, b)), compose(CrossNeg(a, b), tensor(_id(a), SolidDot(b)))


def _rel_dotmovesplits(a, b):
    yield compose(Split(a, b), SolidDot(a + b)), compose(tensor(SolidDot(a), SolidDot(b)), Split(a, b))
    yield compose(SolidDot(a + b), Merge(a, b)), compose(Merge(a, b), tensor(SolidDot(a), SolidDot(b)))


def _balloon(a, middle) -> Term:
    return compose(merge_chain((1,) * a), tensor(*[middle] * a), split_chain((1,) * a))


def _rel_intergralballon(a):
    if a < 1:
        raise PolyRepError("balloon needs a >= 1")
    yield _balloon(a, SolidDot(1)), _lc((q_factorial(a), SolidDot(a)))
    yield _balloon(a, OpenDot(1)), _lc((q_factorial(a), OpenDot(a)))


def _rel_crossinverse(a, b):
    yield compose(CrossPos(b, a), CrossNeg(a, b)), _id(a, b)
    yield compose(CrossNeg(b, a), CrossPos(a, b)), _id(a, b)


def _rel_dotinverse(a):
    yield compose(SolidDot(a), OpenDot(a)), _id(a)
    yield compose(OpenDot(a), SolidDot(a)), _id(a)


def _rel_hecke(a=1, b=1):
    yield compose(CrossPos(1, 1), CrossPos(1, 1)), _lc((IntLaurent.q(-1) - Q1, CrossPos(1, 1)), (1, _id(1, 1)))


Q1 = IntLaurent.q(1)


def _rel_braid(a, b, c):
    yield (
        compose(tensor(CrossPos(b, c), _id(a)), tensor(_id(b), CrossPos(a, c)), tensor(CrossPos(a, b), _id(c))),
        compose(tensor(_id(c), CrossPos(a, b)), tensor(CrossPos(a, c), _id(b)), tensor(_id(a), CrossPos(b, c))),
    )


def _rel_sliders(a, b, c):
    # a merge slides through a crossing, on either side
    yield (
        compose(CrossPos(a + b, c), tensor(Merge(a, b), _id(c))),
        compose(tensor(_id(c), Merge(a, b)), tensor(CrossPos(a, c), _id(b)), tensor(_id(a), CrossPos(b, c))),
    )
    yield (
        compose(CrossPos(c, a + b), tensor(_id(c), Merge(a, b))),
        compose(tensor(Merge(a, b), _id(c)), tensor(_id(a), CrossPos(c, b)), tensor(CrossPos(c, a), _id(b))),
    )
    yield (
        compose(tensor(Split(a, b), _id(c)), CrossPos(c, a + b)),
        compose(tensor(_id(a), CrossPos(c, b)), tensor(CrossPos(c, a), _id(b)), tensor(_id(c), Split(a, b))),
    )


def _rel_unfold(a, b):
    yield compose(Merge(b, a), CrossNeg(a, b)), _lc((q_pow(a * b), Merge(a, b)))
    yield compose(CrossNeg(b, a), Split(b, a)), _lc((q_pow(a * b), Split(a, b)))


def _rel_crossviasquare(a, b):
    yield CrossPos(a, b), LinearCombination(tuple(((-Q1) ** s if s else ONE, ladder(a, b, s)) for s in range(min(a, b) + 1)))
    qi = IntLaurent.q(-1)
    yield CrossNeg(a, b), LinearCombination(tuple(((-qi) ** s if s else ONE, ladder(a, b, s)) for s in range(min(a, b) + 1)))


def _rel_cross2(a, b):
    """Double crossing as a sum of squares with scalars from the Hecke quadratic."""
    terms = []
    qi = IntLaurent.q(-1)
    for s in range(min(a, b) + 1):
        c = q_pow(-s * (s - 1) // 2 - s * (a + b - 2 * s)) * (qi - Q1) ** s * q_factorial(s) if s else ONE
        sq = compose(
            tensor(_merge(a - s, s), _merge(s, b - s)),
            tensor(_id(a - s), _cross(s, s), _id(b - s)),
            tensor(_split(a - s, s), _split(s, b - s)),
        )
        terms.append((c, sq))
    yield compose(CrossPos(b, a), CrossPos(a, b)), LinearCombination(tuple(terms))


def _move_right(x, y, d) -> Term:
    """(x, y) -> (x - d, y + d) by splitting d off the left strand."""
    return compose(tensor(_id(x - d), _merge(d, y)), tensor(_split(x - d, d), _id(y)))


def _move_left(x, y, c) -> Term:
    """(x, y) -> (x + c, y - c) by splitting c off the right strand."""
    return compose(tensor(_merge(x, c), _id(y - c)), tensor(_id(x), _split(c, y - c)))


def _rel_squareswitch(a, b, c, d):
    if d > a or c > b + d:
        raise PolyRepError("squareswitch needs d <= a and c <= b + d")
    lo, hi = max(0, c - b), min(c, d)
    yield (
        compose(_move_left(a - d, b + d, c), _move_right(a, b, d)),
        LinearCombination(tuple(
            (q_binom(a - b + c - d, s), compose(_move_right(a + c - s, b - c + s, d - s), _move_left(a, b, c - s)))
            for s in range(lo, hi + 1)
        )),
    )


def _rel_squareswitch2(a, b, c, d):
    if d > a or c > b + d:
        raise PolyRepError("squareswitch needs d <= a and c <= b + d")
    lo, hi = max(0, c - b), min(c, d)
    yield (
        compose(_move_right(b + d, a - d, c), _move_left(b, a, d)),
        LinearCombination(tuple(
            (q_binom(a - b + c - d, s), compose(_move_left(b - c + s, a + c - s, d - s), _move_right(b, a, c - s)))
            for s in range(lo, hi + 1)
        )),
    )


def _rel_rightdot(a, b):
    c = q_pow(-2 * a * b)
    yield compose(Merge(a, b), tensor(_id(a), SolidDot(b)), Split(a, b)), _lc((c, omega(a + b, b)))
    yield compose(Merge(a, b), tensor(OpenDot(a), _id(b)), Split(a, b)), _lc((c, omega(a + b, -a)))


def _rel_dots2strands(a, b, r, t):
    if r > a or t > b:
        raise PolyRepError("dots2strands needs r <= a and t <= b")
    c = q_pow(-2 * t * (a - r)) * q_binom(r + t, r) * q_binom(a + b - r - t, a - r)
    yield compose(Merge(a, b), tensor(omega(a, r), omega(b, t)), Split(a, b)), _lc((c, omega(a + b, r + t)))


def _rel_splitmerge(a, b, r):
    yield compose(Merge(a, b), tensor(omega(a, r), _id(b)), Split(a, b)), _lc((q_binom(a + b - r, b), omega(a + b, r)))


def _rel_dotmovesplitabr(a, b, r):
    if r > a + b:
        raise PolyRepError("dotmovesplitabr needs r <= a + b")
    for sign in (1, -1):
        pairs = []
        for s in range(max(0, r - b), min(a, r) + 1):
            c = q_pow(s * (s + b - r) + (a - s) * (r - s))
            pairs.append((c, tensor(omega(a, sign * s), omega(b, sign * (r - s)))))
        yield (
            compose(Split(a, b), omega(a + b, sign * r)),
            LinearCombination(tuple((c, compose(w, Split(a, b))) for c, w in pairs)),
        )
        yield (
            compose(omega(a + b, sign * r), Merge(a, b)),
            LinearCombination(tuple((c, compose(Merge(a, b), w)) for c, w in pairs)),
        )


def _crossing_scalar(s, shift=0):
    if not s:
        return q_pow(shift)
    return q_pow(shift - s * (s - 1) // 2) * (IntLaurent.q(-1) - Q1) ** s * q_factorial(s)


def _rel_crosspm(a, b):
    """Positive crossing through negative ones on the thinned-out strands."""
    terms = []
    for s in range(min(a, b) + 1):
        sq = compose(
            tensor(_merge(s, a - s), _merge(b - s, s)),
            tensor(_id(s), _cross(b - s, a - s, neg=True), _id(s)),
            tensor(_split(s, b - s), _split(a - s, s)),
        )
        terms.append((_crossing_scalar(s), sq))
    yield CrossPos(b, a), LinearCombination(tuple(terms))


def _omega0(a, r) -> Term:
    return _id(a) if not a else omega(a, r)


def _rel_wrdotcross(a, b, r):
    def square(s, mid):
        return compose(
            tensor(_merge(s, b - s), _merge(a - s, s)),
            tensor(_id(s), mid, _id(s)),
            tensor(_split(s, a - s), _split(b - s, s)),
        )

    if r <= a:
        terms = [
            (_crossing_scalar(s, r * s), square(s, compose(tensor(_id(b - s), _omega0(a - s, r)), _cross(a - s, b - s, neg=True))))
            for s in range(min(a - r, b) + 1)
        ]
        yield compose(CrossPos(a, b), tensor(omega(a, r), _id(b))), LinearCombination(tuple(terms))
    if r <= b:
        terms = [
            (_crossing_scalar(s, r * s), square(s, compose(_cross(a - s, b - s, neg=True), tensor(_id(a - s), _omega0(b - s, r)))))
            for s in range(min(a, b - r) + 1)
        ]
        yield compose(tensor(omega(b, r), _id(a)), CrossPos(a, b)), LinearCombination(tuple(terms))


def _rel_dotcommute(a, r, t):
    yield compose(omega(a, r), omega(a, t)), compose(omega(a, t), omega(a, r))


def _rel_redslider(a, b, u):
    U = _id(Red(u))
    yield (
        compose(TraverseUp(a + b, u), tensor(Merge(a, b), U)),
        compose(tensor(U, Merge(a, b)), tensor(TraverseUp(a, u), _id(b)), tensor(_id(a), TraverseUp(b, u))),
    )
    yield (
        compose(TraverseDown(a + b, u), tensor(U, Merge(a, b))),
        compose(tensor(Merge(a, b), U), tensor(_id(a), TraverseDown(b, u)), tensor(TraverseDown(a, u), _id(b))),
    )
    yield (
        compose(tensor(Split(a, b), U), TraverseDown(a + b, u)),
        compose(tensor(_id(a), TraverseDown(b, u)), tensor(TraverseDown(a, u), _id(b)), tensor(U, Split(a, b))),
    )
    yield (
        compose(tensor(U, Split(a, b)), TraverseUp(a + b, u)),
        compose(tensor(TraverseUp(a, u), _id(b)), tensor(_id(a), TraverseUp(b, u)), tensor(Split(a, b), U)),
    )


def _rel_redcross2(a, u):
    g = g_polynomial(a, u)
    yield compose(TraverseDown(a, u), TraverseUp(a, u)), g.pad((), (Red(u),))
    yield compose(TraverseUp(a, u), TraverseDown(a, u)), g.pad((Red(u),), ())


def _rel_redbraid(a, b, u):
    lhs = compose(
        tensor(TraverseDown(b, u), _id(a)),
        tensor(_id(Red(u)), CrossPos(a, b)),
        tensor(TraverseUp(a, u), _id(b)),
    )
    qi = IntLaurent.q(-1)
    terms = []
    for s in range(min(a, b) + 1):
        c = ((-1) ** s) * q_pow(s * (s - 1) // 2) * (qi - Q1) ** s * q_factorial(s) if s else ONE
        body = compose(
            tensor(_merge(s, b - s), _id(Red(u)), _merge(a - s, s)),
            tensor(_id(s, b - s), _tup(a - s, u), _id(s)),
            tensor(_id(s), _cross(a - s, b - s), _id(Red(u)), _sd(s)),
            tensor(_id(s, a - s), _tdown(b - s, u), _id(s)),
            tensor(_split(s, a - s), _id(Red(u)), _split(b - s, s)),
        )
        terms.append((c, body))
    yield lhs, LinearCombination(tuple(terms))


def _rel_adamovecrossings(a, b, u):
    U = _id(Red(u))
    yield (
        compose(tensor(TraverseUp(b, u), _id(a)), tensor(_id(b), TraverseUp(a, u)), tensor(CrossPos(a, b), U)),
        compose(tensor(U, CrossPos(a, b)), tensor(TraverseUp(a, u), _id(b)), tensor(_id(a), TraverseUp(b, u))),
    )
    yield (
        compose(tensor(_id(b), TraverseDown(a, u)), tensor(TraverseDown(b, u), _id(a)), tensor(U, CrossPos(a, b))),
        compose(tensor(CrossPos(a, b), U), tensor(_id(a), TraverseDown(b, u)), tensor(TraverseDown(a, u), _id(b))),
    )


def _rel_dotmoveadaptor(a, r, u):
    yield compose(TraverseUp(a, u), tensor(omega(a, r), _id(Red(u)))), compose(tensor(_id(Red(u)), omega(a, r)), TraverseUp(a, u))
    yield compose(TraverseDown(a, u), tensor(_id(Red(u)), omega(a, r))), compose(tensor(omega(a, r), _id(Red(u))), TraverseDown(a, u))


def _rel_balloon(r, u):
    """Split into r thin strands, apply (dot - u) to each, merge back."""
    u = scalar(u)
    terms = []
    for choice in itertools.product((True, False), repeat=r):
        n = choice.count(False)
        c = (-u) ** n if n else ONE
        mids = [SolidDot(1) if x else _id(1) for x in choice]
        terms.append((c, compose(merge_chain((1,) * r), tensor(*mids), split_chain((1,) * r))))
    yield LinearCombination(tuple(terms)), g_polynomial(r, u).scale(q_factorial(r))


RELATIONS = {
    "webassoc": (_rel_webassoc, ("a", "b", "c")),
    "mergesplit": (_rel_mergesplit, ("a", "b", "c")),
    "splitbinomial": (_rel_splitbinomial, ("a", "b")),
    "dotmovecrossing": (_rel_dotmovecrossing, ("a", "b")),
    "dotmovesplits+merge": (_rel_dotmovesplits, ("a", "b")),
    "intergralballon": (_rel_intergralballon, ("a",)),
    "crossinverse": (_rel_crossinverse, ("a", "b")),
    "dotinverse": (_rel_dotinverse, ("a",)),
    "Hecke": (_rel_hecke, ()),
    "braid": (_rel_braid, ("a", "b", "c")),
    "sliders": (_rel_sliders, ("a", "b", "c")),
    "unfold": (_rel_unfold, ("a", "b")),
    "cross via square": (_rel_crossviasquare, ("a", "b")),
    "cross2": (_rel_cross2, ("a", "b")),
    "dotcommutative": (_rel_dotcommute, ("a", "r", "t")),
    "redslider": (_rel_redslider, ("a", "b", "u")),
    "redcross2": (_rel_redcross2, ("a", "u")),
    "redbraid": (_rel_redbraid, ("a", "b", "u")),
    "adamovecrossings": (_rel_adamovecrossings, ("a", "b", "u")),
    "dotmoveadaptor": (_rel_dotmoveadaptor, ("a", "r", "u")),
    "balloon": (_rel_balloon, ("r", "u")),
    "squareswitch": (_rel_squareswitch, ("a", "b", "c", "d")),
    "squareswitch2": (_rel_squareswitch2, ("a", "b", "c", "d")),
    "rightdot": (_rel_rightdot, ("a", "b")),
    "dots2strands": (_rel_dots2strands, ("a", "b", "r", "t")),
    "splitmerge": (_rel_splitmerge, ("a", "b", "r")),
    "dotmovesplitabr": (_rel_dotmovesplitabr, ("a", "b", "r")),
    "cross+=-": (_rel_crosspm, ("a", "b")),
    "wrdotcross": (_rel_wrdotcross, ("a", "b", "r")),
}

RED_RELATIONS = frozenset({"redslider", "redcross2", "redbraid", "adamovecrossings", "dotmoveadaptor", "balloon"})


@dataclass
class RelationReport:
    relation: str
    params: dict
    probes: int
    elapsed: float
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "params": {k: str(v) for k, v in self.params.items()},
            "probes": self.probes,
            "elapsed": round(self.elapsed, 4),
            "pass": self.passed,
            "witness": self.witness,
        }


def relation_sides(name: str, **params) -> list:
    if name not in RELATIONS:
        raise PolyRepError(f"unknown relation {name!r}")
    fn, names = RELATIONS[name]
    missing = [n for n in names if n not in params]
    if missing and name != "mergesplit":
        raise PolyRepError(f"relation {name} needs parameters {names}")
    args = [params[n] for n in names]
    if name == "mergesplit" and "d" in params:
        args.append(params["d"])
    return list(fn(*args))


def verify_relation_report(name: str, limit: int | None = None, seed: int = 0, **params) -> RelationReport:
    """Check one relation instance; `limit` caps the probes per equation (seeded subset)."""
    t0 = time.perf_counter()
    probes, witness, ok = 0, None, True
    for k, (lhs, rhs) in enumerate(relation_sides(name, **params)):
        cert = compare(lhs, rhs, limit=limit, seed=seed)
        probes += cert.probes
        if not cert.equal:
            ok, witness = False, {"equation": k, "probe": cert.witness}
            break
    rep = RelationReport(name, params, probes, time.perf_counter() - t0, ok, witness)
    log.info("relation %s", json.dumps(rep.to_json()))
    return rep


def verify_relation(name: str, limit: int | None = None, **params) -> bool:
    return verify_relation_report(name, limit=limit, **params).passed


# relations where four thicknesses interact are capped one lower
_FOUR_THICK = {"mergesplit", "squareswitch", "squareswitch2"}

# admissible parameters beyond "every thickness in range"
_CONSTRAINTS = {
    "mergesplit": lambda p: p["a"] + p["c"] == p["b"] + p["d"],
    "squareswitch": lambda p: p["d"] <= p["a"] and p["c"] <= p["b"] + p["d"],
    "squareswitch2": lambda p: p["d"] <= p["a"] and p["c"] <= p["b"] + p["d"],
    "dots2strands": lambda p: p["r"] <= p["a"] and p["t"] <= p["b"],
    "dotmovesplitabr": lambda p: p["r"] <= p["a"] + p["b"],
    "wrdotcross": lambda p: p["r"] <= max(p["a"], p["b"]),
}


def _default_constraint(p) -> bool:
    return not ("a" in p and (p.get("r", 0) > p["a"] or p.get("t", 0) > p["a"]))


def relation_instances(name: str, max_thickness: int, u="q") -> list:
    """Parameter dicts of a relation with every thickness <= max_thickness."""
    if name not in RELATIONS:
        raise PolyRepError(f"unknown relation {name!r}")
    _, names = RELATIONS[name]
    top = min(max_thickness, 2) if name in _FOUR_THICK else max_thickness
    ok = _CONSTRAINTS.get(name, _default_constraint)
    if name == "mergesplit":
        names = ("a", "b", "c", "d")
    free = [n for n in names if n != "u"]
    out = []
    for vals in itertools.product(range(1, top + 1), repeat=len(free)):
        p = dict(zip(free, vals))
        if not ok(p):
            continue
        if "u" in names:
            p["u"] = u
        out.append(p)
    return out


def end_one_images(a: int, max_degree: int) -> dict:
    """{nu: image of 1 under omega_{a,nu}} for nu in RPar_a of degree <= max_degree."""
    from .combinat import rational_partitions
    from .diagram import omega_packet

    one = MultiLaurent.constant(a, 1)
    return {nu: evaluate(omega_packet(a, nu), one) for nu in rational_partitions(a, max_degree)}
