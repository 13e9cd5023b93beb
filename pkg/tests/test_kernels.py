import os
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest

from mindist import _kernels

BACKENDS = _kernels.available_backends()
P = 2**31 - 1


@pytest.mark.parametrize("seed", range(5))
def test_rank_backends_agree(seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 5, size=(12, 9))
    a[3] = a[1] + a[2]
    ranks = {b: _kernels.rank_mod_p(a, P, b) for b in BACKENDS}
    assert len(set(ranks.values())) == 1
    assert ranks[BACKENDS[0]] == np.linalg.matrix_rank(a.astype(float))


@pytest.mark.parametrize("p", [2, 7, 101, P])
def test_rref_backends_agree(p):
    rng = np.random.default_rng(p)
    a = rng.integers(0, p, size=(6, 8))
    out = [_kernels.rref_mod_p(a, p, b) for b in BACKENDS]
    for arr, piv in out[1:]:
        assert np.array_equal(arr, out[0][0]) and list(piv) == list(out[0][1])
    arr, piv = out[0]
    for i, c in enumerate(piv):
        assert arr[i, c] == 1
        assert all(arr[k, c] == 0 for k in range(arr.shape[0]) if k != i)


def test_big_python_ints_are_reduced():
    a = [[P + 1, 2 * P], [3 * P + 2, 5]]
    assert _kernels.rank_mod_p(a, P) == 2  # [[1, 0], [2, 5]]


@pytest.mark.parametrize("n,m", [(2, 8), (3, 9), (4, 8)])
def test_subset_normals_agree(n, m):
    rng = np.random.default_rng(n * 100 + m)
    pts = rng.integers(-9, 10, size=(m, n + 1))
    pts[2] = pts[0] + pts[1]  # force some coincidences
    combos = np.array(list(combinations(range(m), n)))
    res = [_kernels.subset_normals(pts, combos, b) for b in BACKENDS]
    for normals, counts in res[1:]:
        assert np.array_equal(normals, res[0][0]) and np.array_equal(counts, res[0][1])
    normals, counts = res[0]
    for t, combo in enumerate(combos):
        if counts[t] >= 0:
            assert all(normals[t] @ pts[i] == 0 for i in combo)


def test_int64_guard():
    assert _kernels.int64_safe_incidence(9, 4)
    assert not _kernels.int64_safe_incidence(10**9, 4)


def test_env_flag_selects_numpy():
    env = dict(os.environ, MINDIST_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from mindist import _kernels; print(_kernels.BACKEND, _kernels.USE_NUMBA)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.split() == ["numpy", "False"]


def test_pipeline_same_under_numpy_fallback(tmp_path):
    env = dict(os.environ, MINDIST_DISABLE_NUMBA="1")
    code = (
        "from mindist.constructions import load_fixture\n"
        "from mindist.report import analyze\n"
        "print(analyze(load_fixture('p3_six_plane_three_line')).to_json())\n"
    )
    slow = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    fast = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert slow.stdout == fast.stdout
