from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import rank_by_minors
from mindist.field import PrimeField, QQ
from mindist.linalg import (
    ExactMatrix,
    kernel_basis,
    nullity,
    rank,
    rank_exact,
    rank_lower_bound_mod_p,
    rref,
    to_field,
)

small = st.integers(-6, 6)


def matrices(max_r=4, max_c=5):
    return st.integers(1, max_r).flatmap(
        lambda r: st.integers(1, max_c).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rref_example():
    R, rk, piv = rref([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rk == 2 and piv == [0, 1]
    assert R.rows[0] == (1, 0, 1)
    assert R.rows[1] == (0, 1, 1)
    assert R.rows[2] == (0, 0, 0)


def test_rational_entries():
    M = ExactMatrix([["1/2", "1/3"], ["1/4", "1/6"]])
    assert rank(M) == 1
    assert kernel_basis(M) == [(Fraction(-2, 3), Fraction(1))]


def test_empty_shapes():
    assert rank([]) == 0
    assert kernel_basis(ExactMatrix([], 3)) == [
        (1, 0, 0), (0, 1, 0), (0, 0, 1)
    ]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(rows):
    assert rank(rows) == rank_by_minors(rows)
    assert rank_exact(rows) == rank_by_minors(rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent_and_transpose_rank(rows):
    R, rk, _ = rref(rows)
    R2, rk2, _ = rref(R)
    assert R2 == R and rk2 == rk
    assert rank(ExactMatrix(rows).T) == rk


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_kernel(rows):
    M = ExactMatrix(rows)
    ker = kernel_basis(M)
    assert len(ker) == M.ncols - rank(M) == nullity(M)
    for v in ker:
        assert all(x == 0 for x in M.apply(v))
    if ker:
        assert rank(ker) == len(ker)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_modular_rank_is_lower_bound(rows):
    assert rank_lower_bound_mod_p(rows, 5) <= rank(rows)
    assert rank_lower_bound_mod_p(rows) == rank(rows)  # small entries: large p is exact


def test_modular_rank_can_drop():
    rows = [[1, 2], [3, 1]]  # det -5
    assert rank(rows) == 2
    assert rank_lower_bound_mod_p(rows, 5) == 1


def test_prime_field_paths_agree():
    rows = [[1, 2, 3, 4], [2, 3, 4, 5], [3, 5, 7, 9]]
    for F in (PrimeField(7), PrimeField(2**31 - 1), PrimeField(2**61 - 1)):
        M = to_field(ExactMatrix(rows), F)
        R, rk, piv = rref(M)
        assert rk == 2 and piv == [0, 1]
        for v in kernel_basis(M):
            assert all(x == 0 for x in M.apply(v))


def test_matmul_identity():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert M @ ExactMatrix.identity(2) == M
    assert (M @ M).rows == ((7, 10), (15, 22))
