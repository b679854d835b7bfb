"""Indexing combinatorics: compositions, multicompositions, rational and
bounded partitions, integer matrices with prescribed margins, basis labels,
multitableaux, and symmetric-group data (coset representatives, reduced
words, Young subgroups).

Permutations are tuples of 0-based images, read as functions.  The reduced
word (i_1, ..., i_k) of w means w = s_{i_1} o ... o s_{i_k}, so that
H_w = H_{i_1} ... H_{i_k}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

Composition = tuple  # tuple[int, ...] of positive parts


# ---------------------------------------------------------------------------
# compositions


@lru_cache(maxsize=None)
def compositions(m: int) -> tuple:
    """Strict compositions of m, in decreasing lexicographic order."""
    if m == 0:
        return ((),)
    out = []
    for first in range(m, 0, -1):
        for rest in compositions(m - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(m: int, max_part: int | None = None, max_len: int | None = None) -> tuple:
    """Partitions of m (positive parts), decreasing lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(m, max_part), 0, -1):
        nl = None if max_len is None else max_len - 1
        for rest in partitions(m - first, first, nl):
            out.append((first,) + rest)
    return tuple(out)


def is_partition(p: Sequence[int]) -> bool:
    return all(x > 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


@dataclass(frozen=True, order=True)
class MultiComposition:
    """A tuple of strict compositions; component k is the k-th block group.

    Component 0 is the part that sits left of every red strand.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c) for c in self.components)
        for c in comps:
            if any(x <= 0 for x in c):
                raise ValueError(f"composition parts must be positive: {c}")
        object.__setattr__(self, "components", comps)

    @property
    def level(self) -> int:
        return len(self.components) - 1

    @property
    def flat(self) -> tuple:
        return tuple(x for c in self.components for x in c)

    @property
    def weight(self) -> int:
        return sum(self.flat)

    def blocks(self) -> list:
        """(component, row, part) for each part in order; rows are 1-based."""
        return [(k, i + 1, x) for k, c in enumerate(self.components) for i, x in enumerate(c)]

    def is_cyclotomic(self) -> bool:
        return not self.components[0]

    def is_multipartition(self) -> bool:
        return all(is_partition(c) for c in self.components)

    def __str__(self):
        return "|".join(",".join(map(str, c)) for c in self.components)

    @classmethod
    def parse(cls, text: str) -> "MultiComposition":
        comps = []
        for part in text.split("|"):
            part = part.strip()
            comps.append(tuple(int(x) for x in part.split(",") if x.strip()) if part else ())
        return cls(tuple(comps))

    def to_json(self):
        return [list(c) for c in self.components]

    @classmethod
    def cyclotomic(cls, *comps) -> "MultiComposition":
        """(empty, comps...) -- the objects seen by the DJM side."""
        return cls(((),) + tuple(tuple(c) for c in comps))


def parse_composition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(x) for x in text.split(","))
    if any(x <= 0 for x in parts):
        raise ValueError(f"composition parts must be positive: {text}")
    return parts


def enumerate_objects(m: int, ell: int, empty_zero: bool = False) -> list:
    """Strict compositions of m (ell = 0) or strict (1+ell)-multicompositions.

    With empty_zero the component 0 is forced empty (the cyclotomic objects).
    """
    if ell == 0:
        return list(compositions(m))
    ncomp = ell + 1
    out = []
    for weights in _weight_vectors(m, ncomp):
        if empty_zero and weights[0]:
            continue
        for comps in itertools.product(*(compositions(w) for w in weights)):
            out.append(MultiComposition(tuple(comps)))
    out.sort(key=lambda mc: (tuple(len(c) and -sum(c) for c in mc.components), tuple(tuple(-x for x in c) for c in mc.components)))
    return out


def _weight_vectors(m: int, n: int) -> Iterator[tuple]:
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in _weight_vectors(m - first, n - 1):
            yield (first,) + rest


def multipartitions(m: int, ell: int) -> list:
    """Par^ell(m) as cyclotomic MultiCompositions (empty component 0)."""
    out = []
    for weights in _weight_vectors(m, ell):
        for parts in itertools.product(*(partitions(w) for w in weights)):
            out.append(MultiComposition(((),) + tuple(parts)))
    return out


def dominates(lam: MultiComposition, mu: MultiComposition) -> bool:
    """Dominance order on multipartitions (component sizes first)."""
    a, b = lam.components[1:], mu.components[1:]
    ta = tb = 0
    for k in range(len(a)):
        for j in range(max(len(a[k]), len(b[k])) + 1):
            sa = ta + sum(a[k][:j])
            sb = tb + sum(b[k][:j])
            if sa < sb:
                return False
        ta += sum(a[k])
        tb += sum(b[k])
    return True


# ---------------------------------------------------------------------------
# matrices


def enumerate_matrices(lam: Sequence[int], mu: Sequence[int]) -> list:
    """Non-negative integer matrices with row sums lam and column sums mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return []
    out = []

    def rows(i: int, cols_left: tuple, acc: list):
        if i == len(lam):
            if not any(cols_left):
                out.append(tuple(acc))
            return
        for row in _row_fillings(lam[i], cols_left):
            rows(i + 1, tuple(c - r for c, r in zip(cols_left, row)), acc + [row])

    rows(0, mu, [])
    out.sort(key=lambda A: tuple(-x for r in A for x in r))
    return out


def _row_fillings(total: int, caps: tuple) -> Iterator[tuple]:
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    for x in range(min(total, caps[0]), max(0, total - rest_cap) - 1, -1):
        for tail in _row_fillings(total - x, caps[1:]):
            yield (x,) + tail


def transpose_matrix(A: Sequence[Sequence]) -> tuple:
    if not A:
        return ()
    return tuple(zip(*A))


# ---------------------------------------------------------------------------
# rational and bounded partitions


def is_rational_partition(nu: Sequence[int], a: int) -> bool:
    if any(x == 0 or abs(x) > a for x in nu):
        return False
    if any(nu[i] < nu[i + 1] for i in range(len(nu) - 1)):
        return False
    return not nu or nu[0] - nu[-1] <= a


@lru_cache(maxsize=None)
def rational_partitions(a: int, max_degree: int) -> tuple:
    """RPar_a with zero entries excluded and sum of |entries| <= max_degree.

    Ordered by degree, then decreasing lexicographically.
    """
    out = []

    def grow(prefix: tuple, deg: int):
        out.append(prefix)
        hi = prefix[-1] if prefix else a
        for x in range(hi, -a - 1, -1):
            if x == 0:
                continue
            if prefix and prefix[0] - x > a:
                break
            if deg + abs(x) > max_degree:
                continue
            grow(prefix + (x,), deg + abs(x))

    grow((), 0)
    out.sort(key=lambda t: (sum(abs(x) for x in t), tuple(-x for x in t), len(t)))
    return tuple(out)


@lru_cache(maxsize=None)
def bounded_partitions(a: int, max_len: int, max_degree: int | None = None) -> tuple:
    """Partitions with parts <= a and at most max_len parts."""
    out = []

    def grow(prefix: tuple, deg: int):
        out.append(prefix)
        if len(prefix) == max_len:
            return
        hi = prefix[-1] if prefix else a
        for x in range(hi, 0, -1):
            if max_degree is not None and deg + x > max_degree:
                continue
            grow(prefix + (x,), deg + x)

    if max_len >= 0:
        grow((), 0)
    out.sort(key=lambda t: (sum(t), tuple(-x for x in t)))
    return tuple(out)


def packet_degree(nu: Sequence[int]) -> int:
    return sum(abs(x) for x in nu)


# ---------------------------------------------------------------------------
# basis labels

RPARMAT = "RParMat"
PARMAT_FLAT = "ParMat_flat"
PARMAT_ELL = "ParMat_ell"
KINDS = (RPARMAT, PARMAT_FLAT, PARMAT_ELL)


@dataclass(frozen=True, order=True)
class BasisLabel:
    """A matrix A of leg thicknesses and a matrix P of dot packets.

    Rows index the target parts, columns the source parts; P[i][j] is the
    packet on the leg of thickness A[i][j] (empty when A[i][j] = 0).
    """

    A: tuple
    P: tuple
    kind: str = RPARMAT

    def dot_degree(self) -> int:
        return sum(packet_degree(nu) for row in self.P for nu in row)

    def transpose(self) -> "BasisLabel":
        return BasisLabel(transpose_matrix(self.A), transpose_matrix(self.P), self.kind)

    def to_json(self) -> dict:
        return {
            "A": [list(r) for r in self.A],
            "P": [[list(nu) for nu in r] for r in self.P],
            "kind": self.kind,
        }

    def __str__(self):
        rows = []
        for r, pr in zip(self.A, self.P):
            rows.append(" ".join(f"{a}" + (f"{list(nu)}" if nu else "") for a, nu in zip(r, pr)))
        return "[" + "; ".join(rows) + "]"


def _flat(obj) -> tuple:
    return obj.flat if isinstance(obj, MultiComposition) else tuple(obj)


def _block_index(obj) -> list:
    """Component index of each part (1-based components for cyclotomic)."""
    if isinstance(obj, MultiComposition):
        return [k for k, c in enumerate(obj.components) for _ in c]
    return [1] * len(obj)


def enumerate_basis_labels(kind: str, lam, mu, dot_bound: int | None = None, ell: int | None = None) -> list:
    """Labels of the requested kind for Hom(mu, lam).

    RParMat needs dot_bound (total packet degree).  ParMat_flat uses the block
    structure of lam and mu; ParMat_ell needs ell.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown label kind {kind!r}")
    lf, mf = _flat(lam), _flat(mu)
    if kind == RPARMAT and dot_bound is None:
        raise ValueError("RParMat labels need a finite dot bound")
    if kind == PARMAT_ELL and ell is None:
        raise ValueError("ParMat_ell labels need the level ell")
    rb, cb = _block_index(lam), _block_index(mu)
    out = []
    for A in enumerate_matrices(lf, mf):
        cells = [(i, j) for i in range(len(lf)) for j in range(len(mf)) if A[i][j]]
        choices = []
        for i, j in cells:
            a = A[i][j]
            if kind == RPARMAT:
                choices.append(rational_partitions(a, dot_bound))
            elif kind == PARMAT_FLAT:
                choices.append(bounded_partitions(a, min(rb[i], cb[j]) - 1, dot_bound))
            else:
                choices.append(bounded_partitions(a, ell - 1, dot_bound))
        for pick in itertools.product(*choices):
            if kind == RPARMAT and sum(packet_degree(nu) for nu in pick) > dot_bound:
                continue
            if dot_bound is not None and kind != RPARMAT and sum(packet_degree(nu) for nu in pick) > dot_bound:
                continue
            P = [[() for _ in mf] for _ in lf]
            for (i, j), nu in zip(cells, pick):
                P[i][j] = nu
            out.append(BasisLabel(A, tuple(tuple(r) for r in P), kind))
    return out


# ---------------------------------------------------------------------------
# symmetric group


def perm_length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_compose(u: Sequence[int], v: Sequence[int]) -> tuple:
    """(u o v)(j) = u(v(j))."""
    return tuple(u[v[j]] for j in range(len(v)))


def perm_inverse(w: Sequence[int]) -> tuple:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def reduced_word(w: Sequence[int]) -> tuple:
    """Word (i_1..i_k), 1-based, with w = s_{i_1} o ... o s_{i_k}.

    Peels left descents: s_i o w is shorter iff w^{-1}(i) > w^{-1}(i+1).
    """
    w = list(w)
    word = []
    while True:
        inv = perm_inverse(w)
        for i in range(len(w) - 1):
            if inv[i] > inv[i + 1]:
                word.append(i + 1)
                # s_i o w swaps the values i and i+1
                w = [i + 1 if x == i else i if x == i + 1 else x for x in w]
                break
        else:
            return tuple(word)


def word_to_perm(word: Sequence[int], n: int) -> tuple:
    w = tuple(range(n))
    for i in reversed(word):
        s = list(range(n))
        s[i - 1], s[i] = s[i], s[i - 1]
        w = perm_compose(tuple(s), w)
    return w


@lru_cache(maxsize=None)
def min_coset_reps(a: int, b: int) -> tuple:
    """Minimal representatives d of the cosets d(S_a x S_b) in S_{a+b}.

    Returns (perm, length, reduced word) triples sorted by length; the last
    one is w_{a,b}, of length a*b.
    """
    n = a + b
    out = []
    for first in itertools.combinations(range(n), a):
        rest = [x for x in range(n) if x not in first]
        w = tuple(first) + tuple(rest)
        out.append((w, perm_length(w), reduced_word(w)))
    out.sort(key=lambda t: (t[1], t[2]))
    assert len(out) == comb(n, a)
    return tuple(out)


def longest_coset_rep(a: int, b: int) -> tuple:
    return min_coset_reps(a, b)[-1]


def young_subgroup(comp: Sequence[int]) -> list:
    """All permutations preserving the consecutive blocks of comp."""
    blocks, start = [], 0
    for c in comp:
        blocks.append(list(range(start, start + c)))
        start += c
    out = []
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        out.append(tuple(x for p in perms for x in p))
    return out


# ---------------------------------------------------------------------------
# multitableaux


@dataclass(frozen=True)
class MultiTableau:
    """Filling of a multipartition.

    shape is a cyclotomic MultiComposition (component 0 empty); rows[k] holds
    the rows of component k.  Entries are ints for standard tableaux and
    (value, component) pairs for semistandard ones.
    """

    shape: MultiComposition
    rows: tuple = field(default=())

    def entries(self) -> list:
        return [(k, r, c, x) for k, comp in enumerate(self.rows) for r, row in enumerate(comp) for c, x in enumerate(row)]

    def __str__(self):
        def fmt(x):
            return f"{x[0]}_{x[1]}" if isinstance(x, tuple) else str(x)

        return " | ".join("/".join(" ".join(fmt(x) for x in row) for row in comp) for comp in self.rows[1:])

    def to_json(self):
        return [[[list(x) if isinstance(x, tuple) else x for x in row] for row in comp] for comp in self.rows]


def _boxes(shape: MultiComposition) -> list:
    return [(k, r, c) for k, comp in enumerate(shape.components) for r, length in enumerate(comp) for c in range(length)]


def enumerate_sst(lam: MultiComposition, mu: MultiComposition) -> list:
    """Semistandard lam-tableaux of type mu.

    Entries are pairs (i, p): value i, component p.  Ordered by (p, i); rows
    weakly increase, columns strictly increase, and entries in component s
    have p >= s.
    """
    if lam.weight != mu.weight or len(lam.components) != len(mu.components):
        return []
    counts = {}
    for p, comp in enumerate(mu.components):
        for i, x in enumerate(comp):
            counts[(p, i + 1)] = x
    keys = sorted(counts)  # (p, i) order
    boxes = _boxes(lam)
    fill: dict = {}
    out = []

    def rec(n: int):
        if n == len(boxes):
            rows = []
            for k, comp in enumerate(lam.components):
                rows.append(tuple(tuple((fill[(k, r, c)][1], fill[(k, r, c)][0]) for c in range(length)) for r, length in enumerate(comp)))
            out.append(MultiTableau(lam, tuple(rows)))
            return
        k, r, c = boxes[n]
        for key in keys:
            if not counts[key]:
                continue
            if key[0] < k:
                continue
            if c > 0 and fill[(k, r, c - 1)] > key:
                continue
            if r > 0 and fill[(k, r - 1, c)] >= key:
                continue
            counts[key] -= 1
            fill[(k, r, c)] = key
            rec(n + 1)
            counts[key] += 1
        fill.pop((k, r, c), None)

    rec(0)
    return out


def enumerate_standard(lam: MultiComposition) -> list:
    """Standard lam-tableaux (entries 1..m increasing along rows and columns)."""
    boxes = _boxes(lam)
    m = len(boxes)
    out = []
    fill: dict = {}

    def addable(k, r, c):
        if (k, r, c) in fill:
            return False
        if c > 0 and (k, r, c - 1) not in fill:
            return False
        if r > 0 and (k, r - 1, c) not in fill:
            return False
        return True

    def rec(v: int):
        if v > m:
            rows = []
            for k, comp in enumerate(lam.components):
                rows.append(tuple(tuple(fill[(k, r, c)] for c in range(length)) for r, length in enumerate(comp)))
            out.append(MultiTableau(lam, tuple(rows)))
            return
        for b in boxes:
            if addable(*b):
                fill[b] = v
                rec(v + 1)
                del fill[b]

    rec(1)
    out.sort(key=lambda t: tuple(x for comp in t.rows for row in comp for x in row))
    return out


def initial_tableau(lam: MultiComposition) -> MultiTableau:
    """t^lam: 1..m entered along rows, component by component."""
    v = 1
    rows = []
    for comp in lam.components:
        rr = []
        for length in comp:
            rr.append(tuple(range(v, v + length)))
            v += length
        rows.append(tuple(rr))
    return MultiTableau(lam, tuple(rows))


def tableau_type(t: MultiTableau, mu: MultiComposition) -> MultiTableau:
    """mu(t): replace entry r by (row, component) of r in t^mu."""
    where = {}
    for k, comp in enumerate(initial_tableau(mu).rows):
        for i, row in enumerate(comp):
            for x in row:
                where[x] = (i + 1, k)
    rows = tuple(tuple(tuple(where[x] for x in row) for row in comp) for comp in t.rows)
    return MultiTableau(t.shape, rows)


def d_word(t: MultiTableau) -> tuple:
    """Reduced word of d(t), where t = t^lam d(t) under the right action.

    H_{d(t)} = H_{i_1} ... H_{i_k} for the returned word.
    """
    init = initial_tableau(t.shape)
    m = t.shape.weight
    w = [0] * m  # function with t = w o t^lam on entries
    for comp0, comp1 in zip(init.rows, t.rows):
        for row0, row1 in zip(comp0, comp1):
            for x0, x1 in zip(row0, row1):
                w[x0 - 1] = x1 - 1
    return reduced_word(perm_inverse(tuple(w)))


def sst_inverse_image(S: MultiTableau, mu: MultiComposition) -> list:
    """mu^{-1}(S): standard tableaux of the same shape with mu(t) = S."""
    return [t for t in enumerate_standard(S.shape) if tableau_type(t, mu).rows == S.rows]


def sst_matrix(T: MultiTableau, nu: MultiComposition) -> tuple:
    """A_T in Mat_{nu-bar, lam-bar}: entry ((p,i),(q,j)) counts i_p in row j of T^(q)."""
    lam = T.shape
    rows_idx = [(p, i + 1) for p, comp in enumerate(nu.components) for i in range(len(comp))]
    cols_idx = [(q, j + 1) for q, comp in enumerate(lam.components) for j in range(len(comp))]
    A = []
    for p, i in rows_idx:
        row = []
        for q, j in cols_idx:
            row.append(sum(1 for x in T.rows[q][j - 1] if x == (i, p)))
        A.append(tuple(row))
    return tuple(A)
