import numpy as np
import pytest
from hypothesis import given, strategies as st

from gorkit import linalg

P = 101


def matrices(max_side=6, p=P):
    return st.integers(0, max_side).flatmap(
        lambda r: st.integers(0, max_side).flatmap(
            lambda c: st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c))))


def test_rank_examples():
    assert linalg.rank(np.zeros((0, 0), np.int64), P) == 0
    assert linalg.rank(np.eye(2, dtype=np.int64), P) == 2
    assert linalg.rank(np.array([[1, 2], [2, 4]]), P) == 1


def test_kernel_examples():
    assert linalg.kernel_basis(np.eye(3, dtype=np.int64), P).shape == (3, 0)
    assert linalg.kernel_basis(np.zeros((2, 3), np.int64), P).shape == (3, 3)
    k = linalg.kernel_basis(np.array([[1, 2], [2, 4]]), P)
    assert k.shape == (2, 1)
    # proportional to (2, -1)
    v = k[:, 0]
    assert (v[0] + 2 * v[1]) % P == 0 and v.any()


def test_solve_examples():
    b = np.array([3, 4, 5])
    assert np.array_equal(linalg.solve(np.eye(3, dtype=np.int64), b, P), b)
    assert linalg.solve(np.array([[1], [0]]), np.array([0, 1]), P) is None
    assert linalg.solve(np.array([[2]]), np.array([1]), P).tolist() == [51]


def test_random_matrix_determinism():
    assert linalg.random_matrix(0, 0, 3, P).shape == (0, 0)
    a = linalg.random_matrix(2, 2, 7, P)
    assert np.array_equal(a, linalg.random_matrix(2, 2, 7, P))
    assert ((0 <= a) & (a < P)).all()
    assert not np.array_equal(a, linalg.random_matrix(2, 2, 8, P))


def test_check_prime():
    with pytest.raises(ValueError):
        linalg.check_prime(12)
    linalg.check_prime(32003)


@given(matrices())
def test_rank_nullity(m):
    k = linalg.kernel_basis(m, P)
    assert linalg.rank(m, P) + k.shape[1] == m.shape[1]
    assert not linalg.matmul(m, k, P).any()
    assert linalg.rank(k, P) == k.shape[1]


@given(matrices(), st.integers(0, 2**32 - 1))
def test_solve_consistent_rhs(m, seed):
    x0 = linalg.random_matrix(m.shape[1], 1, seed, P)[:, 0]
    b = linalg.matmul(m, x0, P)
    x = linalg.solve(m, b, P)
    assert x is not None
    assert np.array_equal(linalg.matmul(m, x, P), b)


@given(matrices())
def test_rref_is_idempotent(m):
    r, piv = linalg.rref(m, P)
    r2, piv2 = linalg.rref(r, P)
    assert np.array_equal(r, r2) and list(piv) == list(piv2)
    assert len(piv) == linalg.rank(m, P)


@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_inverse_of_random_square(n, seed):
    m = linalg.random_matrix(n, n, seed, P)
    if linalg.is_invertible(m, P):
        assert np.array_equal(linalg.matmul(m, linalg.inverse(m, P), P), np.eye(n, dtype=np.int64))
    else:
        assert linalg.rank(m, P) < n


@given(matrices())
def test_image_and_cokernel(m):
    img = linalg.image_basis(m, P)
    assert img.shape[1] == linalg.rank(m, P)
    c = linalg.cokernel_map(m, P)
    assert c.shape[0] == m.shape[0] - img.shape[1]
    assert not linalg.matmul(c, m, P).any()
