import numpy as np
import pytest

from mindist.artinian import (
    LinearFormVanishes,
    artinian_reduce,
    min_socle_degree_oracle,
    sample_linear_form,
    socle_degrees,
)
from mindist.constructions import load_fixture
from mindist.errors import ResamplingExhausted
from mindist.groebner import buchberger_moeller, hilbert_function_eval
from mindist.pointset import normalize
from mindist.resolution import betti_table, minimal_resolution


def test_single_point_in_line():
    pts = normalize([[1, 2]])
    A = artinian_reduce(buchberger_moeller(pts), (1, 1), pts)
    assert A.dims() == [1] and A.top_degree == 0
    assert socle_degrees(A) == (0,)


def test_five_points_graded_dims(five_points):
    G = buchberger_moeller(five_points)
    A = artinian_reduce(G, (3, -7, 11), five_points)
    hf = [hilbert_function_eval(five_points, d) for d in range(5)]
    diff = [hf[0]] + [hf[i] - hf[i - 1] for i in range(1, 5)]
    assert A.dims() == [x for x in diff if x] == [1, 2, 1, 1]
    assert A.total_dimension() == 5
    assert socle_degrees(A) == (1, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simplex_plus_one_dims(n):
    pts = load_fixture(f"simplex_plus_one_p{n}")
    r = min_socle_degree_oracle(pts, seed=3)
    assert r.graded_dims == [1, n, 1]
    assert r.socle == (2,)


def test_plane_line_socle(plane_line):
    r = min_socle_degree_oracle(plane_line, seed=0)
    assert r.socle == (2, 3) and r.AN == 2


def test_hyperplane_plus_one_point():
    # m - 1 points in a hyperplane and one outside: A_n = 1
    pts = normalize([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 2, 3], [0, 1, -1, 2], [1, 1, 1, 1]])
    assert min_socle_degree_oracle(pts).AN == 1


def test_vanishing_form_rejected(five_points):
    G = buchberger_moeller(five_points)
    with pytest.raises(LinearFormVanishes):
        artinian_reduce(G, (1, 0, 0), five_points)  # x0 vanishes on the line


def test_resampling_exhaustion():
    # every point of the line over a tiny coefficient range is hit
    pts = normalize([[1, 0], [0, 1], [1, 1], [1, -1]])
    with pytest.raises(ResamplingExhausted):
        sample_linear_form(pts, np.random.default_rng(0), bound=1, attempts=5)


@pytest.mark.parametrize("seed", range(30))
def test_oracle_matches_resolution(seed):
    rng = np.random.default_rng(1000 + seed)
    n = 2 + seed % 2
    m = int(rng.integers(4, 10))
    while True:
        raw = [[int(x) for x in rng.integers(-9, 10, size=n + 1)] for _ in range(m)]
        try:
            pts = normalize(raw, n)
            break
        except ValueError:
            continue
    G = buchberger_moeller(pts)
    t = betti_table(minimal_resolution(G))
    r1 = min_socle_degree_oracle(pts, seed=seed, G=G)
    r2 = min_socle_degree_oracle(pts, seed=seed + 99, G=G)
    assert r1.socle == r2.socle == t.socle_degrees
    assert max(r1.socle) == t.regularity
