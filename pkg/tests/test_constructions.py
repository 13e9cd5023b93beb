import pytest

from mindist.constructions import (
    AN_IN_BETA_OR_BETA_MINUS_1,
    D_EQ_AN,
    D_GT_AN,
    FIXTURES,
    GRAY_ZONE,
    LINE_THREE,
    MiglioreParams,
    classify,
    compute_s,
    expected_generic_hf,
    generic_points,
    is_collinear,
    load_fixture,
    migliore_config,
    plane_and_line_fixture,
)
from mindist.errors import InputError, ResamplingExhausted
from mindist.groebner import buchberger_moeller, hilbert_function_eval
from mindist.points import hyp, min_distance
from mindist.resolution import betti_table, minimal_resolution


@pytest.mark.parametrize("alpha,n,s", [(2, 2, 2), (3, 3, 2), (4, 4, 2), (6, 3, 3), (5, 3, 2), (10, 3, 4), (6, 2, 6)])
def test_compute_s(alpha, n, s):
    assert compute_s(alpha, n) == s


@pytest.mark.parametrize("n,alpha,beta,expected", [
    (3, 5, 4, D_GT_AN),
    (3, 6, 3, AN_IN_BETA_OR_BETA_MINUS_1),
    (3, 6, 2, AN_IN_BETA_OR_BETA_MINUS_1),
    (3, 10, 2, D_EQ_AN),
    (2, 6, 2, D_EQ_AN),
    (3, 5, 3, GRAY_ZONE),
])
def test_classify(n, alpha, beta, expected):
    assert classify(MiglioreParams(n, alpha, beta)) == expected


def test_params_validation():
    with pytest.raises(InputError):
        MiglioreParams(3, 4, 4)  # alpha < beta + n - 2
    with pytest.raises(InputError):
        MiglioreParams(1, 4, 2)


def test_generic_points_line():
    pts, cert = generic_points(1, 5, seed=0)
    assert pts.m == 5 and cert.valid


def test_generic_points_plane():
    pts, cert = generic_points(2, 6, seed=0)
    assert cert.hilbert_values == [1, 3, 6] == expected_generic_hf(2, 6)
    assert [hilbert_function_eval(pts, i) for i in range(5)] == [1, 3, 6, 6, 6]


def test_generic_points_deterministic():
    a, _ = generic_points(2, 7, seed=11)
    b, _ = generic_points(2, 7, seed=11)
    assert a.points == b.points


def test_generic_points_exhaustion():
    # P^1 has only four points with coordinates in {-1, 0, 1}
    with pytest.raises(ResamplingExhausted):
        generic_points(1, 5, seed=0, bound=1)


def test_general_position_option():
    pts, cert = generic_points(3, 5, seed=2, general_position=True)
    assert cert.general_position
    assert hyp(pts)[0] == 3


@pytest.mark.parametrize("n,alpha,beta", [(2, 4, 1), (2, 6, 2), (3, 10, 2), (3, 5, 4), (3, 6, 3)])
def test_config_distance(n, alpha, beta):
    cfg = migliore_config(MiglioreParams(n, alpha, beta, seed=5))
    rep = min_distance(cfg.points)
    assert rep.hyp == alpha and rep.d == beta
    assert is_collinear(cfg.line_part)
    assert len(set(cfg.u)) == beta and all(1 <= u <= 100 for u in cfg.u)
    assert all(p[0] == 0 for p in cfg.hyperplane_part)


def test_config_deterministic():
    p = MiglioreParams(3, 6, 3, seed=9)
    assert migliore_config(p).points == migliore_config(p).points


def test_stored_fixture():
    cfg = plane_and_line_fixture()
    assert is_collinear(LINE_THREE)
    assert cfg.certificate.valid
    assert cfg.points.points == load_fixture("p3_six_plane_three_line").points
    assert cfg.params.s == 3


def test_all_fixture_files_load():
    for name in FIXTURES:
        assert load_fixture(name).m >= 4
    with pytest.raises(KeyError):
        load_fixture("nope")


def _J_table(n, alpha, seed):
    pts, _ = generic_points(n - 1, alpha, seed=seed)
    return betti_table(minimal_resolution(buchberger_moeller(pts)))


@pytest.mark.parametrize("n,alpha", [(3, 5), (3, 6), (3, 10), (4, 10)])
def test_hyperplane_part_is_level(n, alpha):
    t = _J_table(n, alpha, seed=1)
    assert len(set(t.last_shifts)) == 1
    # the top shift is reg + (n - 1); reg is s, or s - 1 when alpha hits a binomial exactly
    assert t.last_shifts[0] == t.regularity + n - 1
    s = compute_s(alpha, n)
    assert t.regularity in (s - 1, s)


def test_hyperplane_part_need_not_be_level():
    # seven generic points of P^2: syzygies of the three cubics sit in degrees 4 and 5
    t = _J_table(3, 7, seed=1)
    assert t.last_shifts == (4, 5)
