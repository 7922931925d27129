import random
from fractions import Fraction

import pytest

from predim.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


def test_simple_bounded_lp():
    # min -x - y  s.t.  x + y <= 4, x <= 2, y <= 3
    res = solve_lp(
        [-1, -1],
        a_ub=[[1, 1], [1, 0], [0, 1]],
        b_ub=[4, 2, 3],
    )
    assert res.status == OPTIMAL
    assert res.value == -4
    assert sum(res.x) == 4


def test_equality_constraint():
    # min x + 2y  s.t.  x + y = 1
    res = solve_lp([1, 2], a_eq=[[1, 1]], b_eq=[1])
    assert res.status == OPTIMAL
    assert res.value == 1
    assert res.x == (1, 0)


def test_infeasible():
    # x <= -1 with x >= 0
    res = solve_lp([1], a_ub=[[1]], b_ub=[-1])
    assert res.status == INFEASIBLE


def test_unbounded():
    res = solve_lp([-1])
    assert res.status == UNBOUNDED


def test_exact_fractions():
    # min -x  s.t.  3x <= 1
    res = solve_lp([-1], a_ub=[[3]], b_ub=[1])
    assert res.value == Fraction(-1, 3)
    assert res.x == (Fraction(1, 3),)


def test_degenerate_redundant_equalities():
    # duplicated equality rows must not break phase 1
    res = solve_lp([1, 1], a_eq=[[1, 1], [1, 1]], b_eq=[1, 1])
    assert res.status == OPTIMAL
    assert res.value == 1


def test_strong_duality_on_randoms():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        c = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        a_ub = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        b_ub = [Fraction(rng.randint(0, 6)) for _ in range(m)]  # x=0 feasible
        res = solve_lp(c, a_ub=a_ub, b_ub=b_ub)
        if res.status != OPTIMAL:
            assert res.status == UNBOUNDED
            continue
        # primal feasibility
        assert all(x >= 0 for x in res.x)
        assert all(
            sum(a * x for a, x in zip(row, res.x)) <= b for row, b in zip(a_ub, b_ub)
        )
        # strong duality: c.x = y.b with y <= 0 for <= rows in a min problem
        assert res.duals is not None
        assert res.value == sum(y * b for y, b in zip(res.duals, b_ub))


def test_against_float_solver():
    scipy = pytest.importorskip("scipy.optimize")
    rng = random.Random(11)
    compared = 0
    while compared < 60:
        n = rng.randint(1, 4)
        m = rng.randint(1, 5)
        c = [rng.randint(-5, 5) for _ in range(n)]
        a_ub = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        b_ub = [rng.randint(0, 8) for _ in range(m)]
        exact = solve_lp(c, a_ub=a_ub, b_ub=b_ub)
        approx = scipy.linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=(0, None), method="highs")
        if exact.status == OPTIMAL:
            assert approx.status == 0
            assert abs(float(exact.value) - approx.fun) < 1e-7
            compared += 1
        elif exact.status == UNBOUNDED:
            assert approx.status == 3
        else:
            assert approx.status == 2
