"""Rationals, linear algebra and the elimination solver."""

from fractions import Fraction as F
import random

import numpy as np
import pytest

from fuzzyriesz.errors import InfeasibleError, InputError, UnboundedError
from fuzzyriesz.linalg import Subspace, matvec, nullspace, rank, solve
from fuzzyriesz.lp import LinearFeasibilityProblem, feasible, lexmin, minimize
from fuzzyriesz.rational import as_rational, ceil_div, fmt


def test_rational_coercion():
    assert as_rational("3/5") == F(3, 5)
    assert as_rational(" -2 ") == -2
    assert fmt(F(4)) == "4/1" and fmt(F(-1, 3)) == "-1/3"
    for bad in (0.5, True, "x/2", None):
        with pytest.raises(InputError):
            as_rational(bad)
    assert ceil_div(F(7), F(2)) == 4 and ceil_div(F(6), F(2)) == 3 and ceil_div(F(0), F(1)) == 0


def test_rank_against_numpy():
    rng = random.Random(0)
    for _ in range(100):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
        assert rank(rows, n) == np.linalg.matrix_rank(np.array(rows, dtype=float))
        for v in nullspace(rows, n):
            assert not any(matvec(rows, v))
        assert len(nullspace(rows, n)) == n - rank(rows, n)


def test_solve():
    assert solve([[1, 1], [1, -1]], [3, 1], 2) == (2, 1)
    assert solve([[1, 1], [2, 2]], [1, 3], 2) is None


def test_subspace_ops():
    a = Subspace.coordinate({0, 1}, 3)
    b = Subspace([(0, 1, 1)], 3)
    assert (0, 5, 0) in a and (0, 0, 1) not in a
    assert (a + b).dim == 3
    assert a.intersection(b).dim == 0
    assert Subspace([(1, 1, 0), (1, -1, 0)], 3) == a
    assert a.support() == {0, 1}


def test_lexmin_examples():
    p = LinearFeasibilityProblem(2)
    p.add_eq([1, 0], 1)
    p.bound(1, 0, 1)
    assert lexmin(p) == (1, 0)
    assert lexmin(p, order=[1, 0]) == (1, 0)


def test_minimize_and_certificate():
    p = LinearFeasibilityProblem(1)
    p.add_ge([1], 3)
    assert minimize(p, [2]) == (6, (3,))
    p.add_le([1], 2)
    with pytest.raises(InfeasibleError) as exc:
        lexmin(p)
    cert = exc.value.certificate
    # x >= 3 is stored as -x <= -3; summing with x <= 2 gives 0 <= -1
    assert cert == {("le", 0): 1, ("le", 1): 1}
    assert not feasible(p)


def test_unbounded():
    p = LinearFeasibilityProblem(1)
    p.add_le([1], 4)
    with pytest.raises(UnboundedError):
        lexmin(p)
    assert minimize(p, [1])[0] is None


def test_lexmin_brute_force_on_small_boxes():
    # integer data with unimodular rows keep the lexmin on the grid
    rng = random.Random(9)
    for _ in range(60):
        p = LinearFeasibilityProblem(2)
        for i in range(2):
            p.bound(i, rng.randint(-3, 0), rng.randint(0, 3))
        p.add_le([1, 1], rng.randint(-2, 4))
        pts = [(x, y) for x in range(-3, 4) for y in range(-3, 4) if p.satisfied_by((x, y))]
        if not pts:
            assert not feasible(p)
            continue
        assert lexmin(p) == min(pts)
