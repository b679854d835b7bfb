import pytest
import sympy
from hypothesis import given, strategies as st

from qschur.linalg import InconsistentSystem, SingularSystem, certified_rank, common_denominator, solve, solve_square
from qschur.ring import IntLaurent, RatFunc

Q = sympy.Symbol("q")

entries = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(IntLaurent)


def to_sympy(f):
    return sum(c * Q**k for k, c in f.items()) if not f.is_zero() else sympy.Integer(0)


def rows_of(mat):
    return [{j: x for j, x in enumerate(r) if not x.is_zero()} for r in mat]


@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n + 1)))
def test_rank_matches_sympy(mat):
    n = len(mat[0])
    r, _ = certified_rank(rows_of(mat), n)
    ref = sympy.Matrix([[to_sympy(x) for x in row] for row in mat]).rank(simplify=True)
    assert r == ref


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n + 1, max_size=n + 2), st.lists(entries, min_size=n, max_size=n))))
def test_solve_recovers_solution(data):
    mat, x0 = data
    n = len(x0)
    rows = rows_of(mat)
    rhs = [sum((a * x0[j] for j, a in r.items()), IntLaurent({})) for r in rows]
    r, _ = certified_rank(rows, n)
    if r < n:
        with pytest.raises(SingularSystem):
            solve(rows, rhs, n)
        return
    sol = solve(rows, rhs, n)
    for v, w in zip(sol.values, x0):
        assert RatFunc(v) == RatFunc(w)


def test_inconsistent_system_has_witness():
    one = IntLaurent.const(1)
    rows = [{0: one}, {0: one}]
    with pytest.raises(InconsistentSystem) as e:
        solve(rows, [one, IntLaurent.q(1)], 1)
    assert e.value.witness == 1


def test_solve_square_needs_rational_functions():
    q = IntLaurent.q(1)
    one = IntLaurent.const(1)
    # (q + 1) x = 1
    (x,) = solve_square([{0: q + one}], [one], 1)
    assert RatFunc(x) * RatFunc(q + one) == RatFunc(one)
    D, nums = common_denominator([x, RatFunc(one)])
    assert RatFunc(nums[0]) == RatFunc(x) * RatFunc(D)
