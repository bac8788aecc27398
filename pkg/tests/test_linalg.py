import numpy as np
from hypothesis import given, strategies as st

from beit.linalg import dense_rank, rank_mod_p, sparse_rank

P = 32003


def test_small():
    assert sparse_rank([{0: 1, 1: 1}, {0: 2, 1: 2}, {2: 5}], P) == 2
    assert dense_rank([[1, 1, 0], [2, 2, 0], [0, 0, 5]], P) == 2
    assert rank_mod_p([], 3, P) == 0


def test_characteristic_matters():
    # det = 101, singular mod 101 only
    m = [[101, 0], [0, 1]]
    assert dense_rank(m, 101) == 1 and dense_rank(m, P) == 2


@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 2 ** 32), st.sampled_from([101, P]))
def test_sparse_equals_dense(m, n, seed, p):
    rng = np.random.default_rng(seed)
    a = rng.integers(-2, 3, size=(m, n)) * (rng.random((m, n)) < 0.5)
    rows = [{j: int(a[i, j]) for j in range(n) if a[i, j]} for i in range(m)]
    r = dense_rank(a, p)
    assert sparse_rank(rows, p) == r == rank_mod_p(rows, n, p)
    assert r <= min(m, n)
