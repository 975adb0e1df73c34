import random

import numpy as np
import pytest

from hfstrata import linalg
from hfstrata.linalg import _fallback

try:
    from hfstrata.linalg import _kernel
except ImportError:  # extension not built; fallback covers everything
    _kernel = None

P = 32003


def random_matrix(rng, m, n, p=P, density=0.7):
    a = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            if rng.random() < density:
                a[i, j] = rng.randrange(p)
    return a


def test_rref_known():
    a = linalg.as_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]], 3)
    r, rank, pivots = linalg.rref(a, 7)
    assert rank == 2 and pivots == [0, 1]
    # fully reduced: pivot columns are unit columns
    assert r[0, 0] == 1 and r[1, 1] == 1 and r[0, 1] == 0


def test_nullspace_annihilates():
    rng = random.Random(3)
    for _ in range(25):
        a = random_matrix(rng, rng.randrange(1, 8), rng.randrange(1, 8))
        ns = linalg.nullspace(a, P)
        assert ((a @ ns) % P == 0).all()
        assert linalg.rank(a, P) + ns.shape[1] == a.shape[1]


def test_solve_consistency():
    rng = random.Random(5)
    for _ in range(25):
        a = random_matrix(rng, 6, 4)
        x_true = random_matrix(rng, 4, 2)
        b = (a @ x_true) % P
        x = linalg.solve(a, b, P)
        assert x is not None
        assert ((a @ x) % P == b % P).all()
    # inconsistent system
    a = linalg.as_matrix([[1, 0], [1, 0]], 2)
    b = linalg.as_matrix([[1], [2]], 1)
    assert linalg.solve(a, b, P) is None


def test_greedy_independent_rows_prefers_early_rows():
    a = linalg.as_matrix([[1, 1, 0], [2, 2, 0], [0, 0, 1]], 3)
    assert linalg.greedy_independent_rows(a, P) == [0, 2]


@pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")
def test_backends_identical():
    rng = random.Random(99)
    for _ in range(40):
        m = rng.randrange(1, 12)
        n = rng.randrange(1, 12)
        a = random_matrix(rng, m, n, density=rng.choice([0.2, 0.5, 0.9]))
        a1 = np.ascontiguousarray(a.copy())
        a2 = np.ascontiguousarray(a.copy())
        r1 = _kernel.rref_inplace(a1, P)
        r2 = _fallback.rref_inplace(a2, P)
        assert r1 == r2
        assert (a1 == a2).all()


def test_empty_shapes():
    assert linalg.rank(linalg.as_matrix([], 3), P) == 0
    ns = linalg.nullspace(linalg.as_matrix([], 3), P)
    assert ns.shape == (3, 3)  # kernel of the zero map is everything
