"""Pure numpy backend for the mod-p RREF kernel.

Must stay behaviourally identical to ``_kernel.pyx``: same pivot choice,
same normalization, same return value.  Row updates are vectorized; with
p < 2**31 and canonical entries the intermediate products fit in int64.
"""

import numpy as np


def rref_inplace(a, p):
    """In-place reduced row echelon form; returns (rank, pivot_columns)."""
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r >= m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i], :] = a[[i, r], :]
        v = int(a[r, c])
        if v != 1:
            inv = pow(v, p - 2, p)
            a[r, c:] = (a[r, c:] * inv) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            f = a[rows, c][:, None]
            a[rows, c:] = (a[rows, c:] - f * a[r, c:]) % p
        pivots.append(c)
        r += 1
    return r, pivots
