from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from curvkit.errors import Infeasible, Unbounded
from curvkit.simplex import solve_lp


def _check_feasible(A, b, x):
    assert all(v >= 0 for v in x)
    for row, rhs in zip(A, b):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) == rhs


def test_small_lp():
    # min x + 2y  s.t. x + y = 1, x - y <= 1/2: x is capped at 3/4
    A = [[1, 1, 0], [1, -1, 1]]
    b = [1, Fraction(1, 2)]
    value, x = solve_lp(A, b, [1, 2, 0])
    assert value == Fraction(5, 4)
    assert x[:2] == [Fraction(3, 4), Fraction(1, 4)]
    _check_feasible(A, b, x)


def test_negative_rhs_is_normalised():
    value, x = solve_lp([[-1, -1]], [-2], [3, 1])
    assert value == 2 and x == [0, 2]


def test_redundant_rows():
    A = [[1, 1], [2, 2], [1, 1]]
    value, x = solve_lp(A, [1, 2, 1], [1, 0])
    assert value == 0
    _check_feasible(A, [1, 2, 1], x)


def test_infeasible():
    with pytest.raises(Infeasible):
        solve_lp([[1, 1]], [-1], [1, 1])


def test_unbounded():
    with pytest.raises(Unbounded):
        solve_lp([[1, -1]], [0], [-1, 0])


def test_degenerate_cycling_example_terminates():
    # Beale's problem in equality form with slacks s1, s2, s3
    A = [
        [Fraction(1, 4), -8, -1, 9, 1, 0, 0],
        [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    c = [Fraction(-3, 4), 20, Fraction(-1, 2), 6, 0, 0, 0]
    value, x = solve_lp(A, b, c)
    ref = linprog(np.array(c, dtype=float), A_eq=np.array(A, dtype=float), b_eq=b, method="highs")
    assert abs(float(value) - ref.fun) < 1e-9
    _check_feasible(A, b, x)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_matches_scipy_on_random_bounded_lps(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(2, 6)
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
    # a bounding row keeps the feasible set compact
    A.append([1] * n)
    x0 = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)]
    b = [sum(a * v for a, v in zip(row, x0)) for row in A]
    c = [rng.randint(-5, 5) for _ in range(n)]
    value, x = solve_lp(A, b, c)
    _check_feasible(A, b, x)
    assert value == sum(ci * xi for ci, xi in zip(c, x))
    ref = linprog(c, A_eq=np.array(A, float), b_eq=np.array(b, float), method="highs")
    assert ref.status == 0
    assert abs(float(value) - ref.fun) < 1e-7
