from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mindist.errors import DegreeCapExceeded
from mindist.groebner import (
    buchberger,
    buchberger_moeller,
    hilbert_function_eval,
    hilbert_function_gb,
    hilbert_table_eval,
    is_groebner,
    is_reduced,
    normal_form,
    point_regularity,
)
from mindist.linalg import kernel_basis
from mindist.pointset import evaluation_matrix, normalize
from mindist.poly import Polynomial, monomials_of_degree, parse_polynomial


def P(text, nv):
    return parse_polynomial(text, nv)


def random_points(seed, n, m, bound=6):
    rng = np.random.default_rng(seed)
    while True:
        raw = [[int(x) for x in rng.integers(-bound, bound + 1, size=n + 1)] for _ in range(m)]
        try:
            return normalize(raw, n)
        except ValueError:
            continue


def test_reduced_basis_is_fixed():
    G = buchberger([P("x0", 3), P("x1", 3)])
    assert [str(g) for g in G] == ["x1", "x0"]


def test_monomial_complete_intersection_is_fixed():
    gens = [P("x0", 4), P("x1^3", 4), P("x2", 4), P("x3", 4)]
    G = buchberger(gens)
    assert sorted(str(g) for g in G) == sorted(str(g) for g in gens)


def test_buchberger_textbook():
    # twisted cubic
    G = buchberger([P("x0*x2 - x1^2", 4), P("x1*x3 - x2^2", 4), P("x0*x3 - x1*x2", 4)])
    assert is_groebner(G) and is_reduced(G)
    assert len(G) == 3


def test_normal_form_of_constant():
    G = buchberger([P("x0^2 - x1*x2", 3), P("x1^2", 3)])
    one = Polynomial.constant(1, 3)
    assert normal_form(one, G) == one


def test_single_point():
    G = buchberger_moeller(normalize([[1, 0, 0, 0]]))
    assert sorted(str(g) for g in G) == ["x1", "x2", "x3"]


def test_five_points_generator_degrees(five_points):
    G = buchberger_moeller(five_points)
    assert is_groebner(G) and is_reduced(G)
    for g in G:
        for p in five_points:
            assert g.evaluate(p) == 0
    # minimal generators are in degrees 2, 2, 4; the reduced basis holds them
    assert sorted(G.degrees())[:2] == [2, 2]
    assert 4 in G.degrees()


@pytest.mark.parametrize("seed", range(6))
def test_basis_matches_evaluation_kernel(seed):
    pts = random_points(seed, 2, 6)
    G = buchberger_moeller(pts)
    for d in range(5):
        monos = monomials_of_degree(2, d)
        ker = kernel_basis(evaluation_matrix(pts, monos))
        # each kernel vector is in <G>
        for v in ker:
            f = Polynomial({m: c for m, c in zip(monos, v)}, 3)
            assert normal_form(f, G).is_zero()
        assert hilbert_function_gb(G, d) == comb(d + 2, 2) - len(ker)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(2, 9))
def test_bm_agrees_with_buchberger(seed, n, m):
    pts = random_points(seed, n, m)
    G = buchberger_moeller(pts)
    G2 = buchberger(list(G.generators))
    assert [str(g) for g in G] == [str(g) for g in G2]
    reg = point_regularity(pts)
    for d in range(reg + 3):
        assert hilbert_function_gb(G, d) == hilbert_function_eval(pts, d)


def test_random_combination_reduces_to_zero(five_points):
    G = buchberger_moeller(five_points)
    f = P("x0 - 3*x2", 3) * G.generators[0] + P("x1^2", 3) * G.generators[-1]
    assert normal_form(f, G).is_zero()
    assert G.contains(f)


def test_hilbert_function_values(five_points):
    assert hilbert_function_eval(five_points, 0) == 1
    assert hilbert_function_eval(five_points, 1) == 3
    table = hilbert_table_eval(five_points)
    assert table.stabilized_at == 3
    assert [table[d] for d in range(6)] == [1, 3, 4, 5, 5, 5]
    G = buchberger_moeller(five_points)
    assert hilbert_function_gb(G, 10) == 5


def test_degree_cap(five_points):
    with pytest.raises(DegreeCapExceeded):
        buchberger_moeller(five_points, max_degree=2)


def test_unsupported_order(five_points):
    with pytest.raises(ValueError):
        buchberger_moeller(five_points, order="lex")
