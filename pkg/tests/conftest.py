"""Shared fixtures and slow-but-obvious oracles used across the tests."""
from fractions import Fraction
from itertools import combinations

import pytest

from mindist.constructions import load_fixture


def det_laplace(rows):
    # cofactor expansion; only for tiny matrices
    k = len(rows)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(k):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * det_laplace(minor)
    return total


def rank_by_minors(rows):
    """Largest k with a nonzero k x k minor."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for k in range(min(nr, nc), 0, -1):
        for ri in combinations(range(nr), k):
            for ci in combinations(range(nc), k):
                if det_laplace([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return k
    return 0


def hyp_by_subsets(points):
    """Largest subset of points lying in a hyperplane, found by testing
    every subset's coordinate rank; exponential, independent of the
    library's normal-vector enumeration."""
    pts = [list(p) for p in points]
    n = len(pts[0]) - 1
    best = 0
    m = len(pts)
    for size in range(m, 0, -1):
        for sub in combinations(range(m), size):
            if rank_by_minors([pts[i] for i in sub]) <= n:
                return size
    return best


@pytest.fixture
def five_points():
    return load_fixture("five_points_four_collinear")


@pytest.fixture
def plane_line():
    return load_fixture("p3_six_plane_three_line")
