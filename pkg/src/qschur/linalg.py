"""Sparse exact linear algebra over Q(q), with mod-p rank certificates.

Matrices are lists of sparse rows ``{column: scalar}`` where scalars are
IntLaurent or RatFunc.  Ranks are certified by specializing q at a random
residue modulo a large prime: rank can only drop under specialization, so
a full rank mod p is a proof of full rank over Q(q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .ring import ONE, ZERO, IntLaurent, RatFunc, _poly_gcd

PRIME = 2_147_483_647


class SingularSystem(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def _eval(x, qv: int, p: int) -> int:
    if isinstance(x, int):
        return x % p
    return x.eval_mod(qv, p)


def specialize(rows: Sequence[dict], qv: int, p: int = PRIME) -> list:
    out = []
    for r in rows:
        d = {}
        for j, x in r.items():
            v = _eval(x, qv, p)
            if v:
                d[j] = v
        out.append(d)
    return out


def rank_mod_p(rows: Sequence[dict], p: int = PRIME) -> tuple[int, list, list]:
    """Rank of an integer matrix mod p; returns (rank, pivot_rows, pivot_cols).

    Pivot rows index into the input and are linearly independent mod p.
    """
    work: dict = {}  # pivot column -> (reduced row, original index)
    piv_rows, piv_cols = [], []
    for idx, r in enumerate(rows):
        r = dict(r)
        while r:
            c = min(r)
            if c not in work:
                inv = pow(r[c], p - 2, p)
                r = {j: v * inv % p for j, v in r.items()}
                work[c] = r
                piv_rows.append(idx)
                piv_cols.append(c)
                break
            pr = work[c]
            f = r[c]
            for j, v in pr.items():
                nv = (r.get(j, 0) - f * v) % p
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return len(piv_rows), piv_rows, piv_cols


def random_point(rng: random.Random | None = None, p: int = PRIME) -> int:
    rng = rng or random.Random(0x5eed)
    return rng.randrange(2, p - 1)


def certified_rank(rows: Sequence[dict], ncols: int, tries: int = 3, seed: int = 1) -> tuple[int, list]:
    """Lower bound on the rank over Q(q) (exact when it equals ncols).

    The maximum over a few random specializations is returned together
    with the pivot rows realizing it.
    """
    rng = random.Random(seed)
    best, best_rows = -1, []
    for _ in range(tries):
        qv = random_point(rng)
        try:
            spec = specialize(rows, qv)
        except ZeroDivisionError:
            continue
        r, pr, _ = rank_mod_p(spec)
        if r > best:
            best, best_rows = r, pr
        if best == ncols:
            break
    return best, best_rows


# ---------------------------------------------------------------------------
# exact elimination


def _as_rat(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


def _cost(x) -> int:
    if isinstance(x, RatFunc):
        n = len(x.num._c) + len(x.den._c)
        return n - 1 if x.den.is_unit() and x.num.is_unit() else n + 4
    return 0 if x.is_unit() else len(x._c) + 4


def _simplest(x):
    if isinstance(x, RatFunc) and x.den.is_unit():
        (k, s), = x.den.items()
        return x.num.shift(-k) * s
    return x


def _div(a, b):
    if isinstance(b, IntLaurent) and b.is_unit():
        (k, s), = b.items()
        return a.shift(-k) * s if isinstance(a, IntLaurent) else a * RatFunc(IntLaurent.q(-k) * s)
    return _simplest(_as_rat(a) / _as_rat(b))


def solve_square(rows: Sequence[dict], rhs: Sequence, n: int) -> list:
    """Solve an n x n sparse system exactly; rows[k] are dicts over 0..n-1.

    Pivots with unit value are preferred, which keeps entries Laurent in
    the common triangular case.
    """
    A = [dict(r) for r in rows]
    b = list(rhs)
    for k, row in enumerate(A):
        if b[k] is None:
            b[k] = ZERO
    active = set(range(len(A)))
    order = []
    for _ in range(n):
        best = None
        for i in active:
            for c, v in A[i].items():
                key = (_cost(v), len(A[i]))
                if best is None or key < best[0]:
                    best = (key, i, c)
        if best is None:
            raise SingularSystem("system is singular")
        _, i, c = best
        active.discard(i)
        pv = A[i][c]
        for k in list(active):
            f = A[k].get(c)
            if f is None:
                continue
            ratio = _div(f, pv)
            for j, v in A[i].items():
                nv = _simplest(A[k].get(j, ZERO) - ratio * v)
                if nv:
                    A[k][j] = nv
                else:
                    A[k].pop(j, None)
            b[k] = _simplest(b[k] - ratio * b[i])
        order.append((i, c))
    x: dict = {}
    for i, c in reversed(order):
        acc = b[i]
        for j, v in A[i].items():
            if j != c:
                acc = acc - v * x[j]
        x[c] = _simplest(_div(acc, A[i][c]))
    return [x[j] for j in range(n)]


def common_denominator(values: Sequence) -> tuple[IntLaurent, list]:
    """(D, [N_j]) with values[j] = N_j / D and all N_j Laurent."""
    D = ONE
    for v in values:
        if isinstance(v, RatFunc) and not v.den.is_unit():
            g = _poly_gcd(D, v.den)
            D = D * v.den.exact_div(g)
    nums = []
    for v in values:
        r = _simplest(_as_rat(v) * RatFunc(D))
        if not isinstance(r, IntLaurent):
            raise ArithmeticError("denominator clearing failed")
        nums.append(r)
    return D, nums


@dataclass
class Solution:
    values: list
    rank: int
    pivot_rows: list


def solve(rows: Sequence[dict], rhs: Sequence, ncols: int, seed: int = 1) -> Solution:
    """Unique solution of an overdetermined consistent system, checked exactly.

    Raises SingularSystem when the columns are not certified independent and
    InconsistentSystem (with a residual row index) when no solution exists.
    """
    if ncols == 0:
        for i, v in enumerate(rhs):
            if v:
                raise InconsistentSystem("nonzero right-hand side with no unknowns", witness=i)
        return Solution([], 0, [])
    r, prow = certified_rank(rows, ncols, seed=seed)
    if r < ncols:
        raise SingularSystem(f"column rank {r} < {ncols}")
    vals = solve_square([rows[i] for i in prow], [rhs[i] for i in prow], ncols)
    D, N = common_denominator(vals)
    for i, row in enumerate(rows):
        acc = ZERO
        for j, a in row.items():
            if N[j]:
                acc = acc + _to_laurent(a) * N[j]
        t = _as_rat(rhs[i]) if rhs[i] else RatFunc(ZERO)
        if acc * t.den != t.num * D:
            raise InconsistentSystem("residual nonzero", witness=i)
    return Solution(vals, r, prow)


def _to_laurent(x) -> IntLaurent:
    if isinstance(x, int):
        return IntLaurent.const(x)
    if isinstance(x, RatFunc):
        if not x.den.is_unit():
            raise ArithmeticError("expected a Laurent coefficient")
        return _simplest(x)
    return x
