from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from gately.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog_exact

F = Fraction


def test_small_lp():
    # min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6
    res = linprog_exact([-1, -1], [[1, 2], [3, 1]], [4, 6])
    assert res.status == OPTIMAL
    assert res.x == [F(8, 5), F(6, 5)]
    assert res.objective == F(-14, 5)
    assert res.duals_ub == [F(-2, 5), F(-1, 5)]


def test_equality_and_negative_rhs():
    # min x + y  s.t.  x - y = -1, x + y >= 3
    res = linprog_exact([1, 1], [[-1, -1]], [-3], [[1, -1]], [-1])
    assert res.status == OPTIMAL
    assert res.objective == 3
    assert res.x[0] - res.x[1] == -1


def test_infeasible_and_unbounded():
    assert linprog_exact([1], [[1]], [-1]).status == INFEASIBLE
    assert linprog_exact([-1], [[-1]], [0]).status == UNBOUNDED
    assert linprog_exact([0, 0], A_eq=[[1, 1], [1, 1]], b_eq=[1, 2]).status == INFEASIBLE


def test_redundant_equalities():
    res = linprog_exact([1, 2], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status == OPTIMAL and res.x == [1, 0]


def test_degenerate_lp_terminates():
    # a classic cycling example for the largest-coefficient rule
    c = [F(-3, 4), 150, F(-1, 50), 6]
    A = [[F(1, 4), -60, F(-1, 25), 9], [F(1, 2), -90, F(-1, 50), 3], [0, 0, 1, 0]]
    res = linprog_exact(c, A, [0, 0, 1])
    assert res.status == OPTIMAL
    assert res.objective == F(-1, 20)


def test_shape_errors():
    with pytest.raises(ValueError):
        linprog_exact([1, 1], [[1]], [1])
    with pytest.raises(ValueError):
        linprog_exact([1], [[1]], [1, 2])


@st.composite
def lps(draw):
    nvar = draw(st.integers(1, 4))
    m_ub = draw(st.integers(0, 4))
    m_eq = draw(st.integers(0, 2))
    ints = st.integers(-4, 4)
    c = draw(st.lists(ints, min_size=nvar, max_size=nvar))
    A_ub = [draw(st.lists(ints, min_size=nvar, max_size=nvar)) for _ in range(m_ub)]
    b_ub = draw(st.lists(ints, min_size=m_ub, max_size=m_ub))
    A_eq = [draw(st.lists(ints, min_size=nvar, max_size=nvar)) for _ in range(m_eq)]
    b_eq = draw(st.lists(ints, min_size=m_eq, max_size=m_eq))
    return c, A_ub, b_ub, A_eq, b_eq


@settings(max_examples=300, deadline=None)
@given(lps())
def test_against_scipy(problem):
    c, A_ub, b_ub, A_eq, b_eq = problem
    res = linprog_exact(c, A_ub, b_ub, A_eq, b_eq)
    kw = dict(A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq or None, b_eq=b_eq or None,
              bounds=[(0, None)] * len(c), method="highs")
    ref = linprog(c, **kw)
    expected = {0: OPTIMAL, 2: INFEASIBLE, 3: UNBOUNDED}[ref.status]
    if expected == INFEASIBLE and linprog([0] * len(c), **kw).status == 0:
        # HiGHS presolve can report "infeasible or unbounded" as infeasible
        expected = UNBOUNDED
    assert res.status == expected
    if res.status != OPTIMAL:
        return
    assert float(res.objective) == pytest.approx(ref.fun, abs=1e-7)
    x = res.x
    for row, b in zip(A_ub, b_ub):
        assert sum(a * xi for a, xi in zip(row, x)) <= b
    for row, b in zip(A_eq, b_eq):
        assert sum(a * xi for a, xi in zip(row, x)) == b
    assert all(xi >= 0 for xi in x)
    # dual feasibility and strong duality, exactly
    y_ub, y_eq = res.duals_ub, res.duals_eq
    assert all(y <= 0 for y in y_ub)
    for j in range(len(c)):
        reduced = c[j] - sum(row[j] * y for row, y in zip(A_ub, y_ub)) - sum(row[j] * y for row, y in zip(A_eq, y_eq))
        assert reduced >= 0
        assert reduced == 0 or x[j] == 0
    assert sum(b * y for b, y in zip(b_ub, y_ub)) + sum(b * y for b, y in zip(b_eq, y_eq)) == res.objective


def test_larger_random_lp_matches_scipy():
    rng = np.random.default_rng(3)
    A = rng.integers(-3, 6, size=(25, 10)).tolist()
    b = rng.integers(1, 20, size=25).tolist()
    c = rng.integers(-5, 2, size=10).tolist()
    res = linprog_exact(c, A, b)
    ref = linprog(c, A_ub=A, b_ub=b, bounds=[(0, None)] * 10, method="highs")
    assert res.status == OPTIMAL and ref.status == 0
    assert float(res.objective) == pytest.approx(ref.fun, abs=1e-7)
