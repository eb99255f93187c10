from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog as scipy_linprog

from morifan.linalg import nullspace, primitive, rank, solve
from morifan.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, is_feasible, linprog


def test_textbook_optimum():
    # min 3x + 4y  s.t.  x + y >= 2, 2x + y >= 3
    r = linprog([3, 4], A_ub=[[-1, -1], [-2, -1]], b_ub=[-2, -3])
    assert r.status == OPTIMAL
    assert r.value == 6 and r.x == (2, 0)


def test_beale_cycling_example_terminates():
    # Beale's example cycles under the largest-coefficient rule
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [Fraction(1, 2), -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
    r = linprog(c, A_ub=A, b_ub=[0, 0, 1])
    assert r.status == OPTIMAL
    assert r.value == Fraction(-1, 20)


def test_infeasible_and_unbounded():
    assert linprog([1], A_eq=[[1]], b_eq=[-1]).status == INFEASIBLE
    assert linprog([-1], A_ub=[[-1]], b_ub=[0]).status == UNBOUNDED
    assert not is_feasible(A_eq=[[1, 1]], b_eq=[-1], nvars=2).feasible


def test_free_variables():
    r = linprog([1], A_eq=[[1]], b_eq=[-3], free=[0])
    assert r.status == OPTIMAL and r.x == (-3,)


def test_redundant_equalities():
    r = linprog([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert r.status == OPTIMAL and r.value == 1


small = st.integers(-4, 4)


@given(
    st.integers(1, 4).flatmap(lambda n: st.tuples(
        st.lists(small, min_size=n, max_size=n),
        st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=3),
        st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    ))
)
def test_agrees_with_float_solver(data):
    c, A, b = data
    b = b[: len(A)]
    # box the variables so the float oracle never sees an unbounded problem
    n = len(c)
    A_box = A + [[int(i == j) for j in range(n)] for i in range(n)]
    b_box = b + [6] * n
    ours = linprog(c, A_ub=A_box, b_ub=b_box)
    ref = scipy_linprog(c, A_ub=A_box, b_ub=b_box, bounds=[(0, None)] * n, method="highs")
    if ref.status == 2:
        assert ours.status == INFEASIBLE
    else:
        assert ref.status == 0
        assert ours.status == OPTIMAL
        assert abs(float(ours.value) - ref.fun) < 1e-7
        assert all(sum(a * x for a, x in zip(row, ours.x)) <= bi for row, bi in zip(A_box, b_box))
        assert all(x >= 0 for x in ours.x)


def test_linalg_basics():
    assert primitive([2, -4, 6]) == (1, -2, 3)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert rank([[1, 2], [2, 4]]) == 1
    (v,) = nullspace([[1, 1, 0], [0, 1, 1]], 3)
    assert primitive(v) in {(1, -1, 1), (-1, 1, -1)}
    assert solve([(1, 0), (1, 1)], (3, 1)) == [2, 1]
    assert solve([(1, 1)], (1, 0)) is None


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_nullspace_is_orthogonal_and_complementary(rows):
    ns = nullspace(rows, 3)
    assert len(ns) + rank(rows) == 3
    for v in ns:
        assert all(sum(a * x for a, x in zip(r, v)) == 0 for r in rows)


@pytest.mark.parametrize("cols,target", [([(1, 2), (3, 4)], (5, 6)), ([(1, 0, 0), (0, 1, 0)], (7, -2, 0))])
def test_solve_reconstructs(cols, target):
    coeffs = solve(cols, target)
    assert tuple(sum(c * col[i] for c, col in zip(coeffs, cols)) for i in range(len(target))) == target
