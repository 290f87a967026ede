import random

import pytest

from quasicyc.linalg import LaurentScalars, matrix_apply, rank_kernel
from quasicyc.scalars import Scalar


def M(rows):
    return [[Scalar.rational(x) for x in row] for row in rows]


def test_identity():
    rank, ker = rank_kernel(M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert rank == 3 and ker == []


def test_zero_matrix():
    rank, ker = rank_kernel(M([[0] * 5, [0] * 5]))
    assert rank == 0 and len(ker) == 5


def test_known_rank():
    rank, ker = rank_kernel(M([[1, 2, 3], [2, 4, 6], [1, 1, 1]]))
    assert rank == 2
    assert len(ker) == 1


def test_kernel_annihilates_random():
    rng = random.Random(11)
    for _ in range(25):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = M([[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)])
        rank, ker = rank_kernel(rows)
        assert rank + len(ker) == n
        for k in ker:
            assert all(v.is_zero() for v in matrix_apply(rows, k))


def test_rank_equals_transpose_rank():
    rng = random.Random(12)
    for _ in range(25):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        rt = [[rows[i][j] for i in range(m)] for j in range(n)]
        assert rank_kernel(M(rows))[0] == rank_kernel(M(rt))[0]


def test_cyclotomic_entries():
    z = Scalar.root_of_unity(3, 1)
    rows = [[z, z * z], [z * z, Scalar.one()]]
    # second row is z times the first, so rank 1
    rank, ker = rank_kernel(rows)
    assert rank == 1
    assert len(ker) == 1
    for k in ker:
        assert all(v.is_zero() for v in matrix_apply(rows, k))


def test_laurent_rejected():
    with pytest.raises(LaurentScalars):
        rank_kernel([[Scalar.q_power(1)]])


def test_determinism():
    rng = random.Random(13)
    rows = M([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
    assert rank_kernel(rows) == rank_kernel([list(r) for r in rows])
