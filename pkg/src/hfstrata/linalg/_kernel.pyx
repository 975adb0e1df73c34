# Compiled mod-p RREF kernel. Mirror of _fallback.rref_inplace: any
# behavioural change here must be replicated there (tests compare them).

cdef inline long long _modinv(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long g = a % p
    cdef long long x = 0, x1 = 1, q, t, m = p
    while g != 0:
        q = m / g
        t = m - q * g
        m = g
        g = t
        t = x - q * x1
        x = x1
        x1 = t
    if x < 0:
        x += p
    return x


cpdef tuple rref_inplace(long long[:, ::1] a, long long p):
    """In-place reduced row echelon form; returns (rank, pivot_columns)."""
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, c, piv
    cdef long long inv, f, tmp
    pivots = []
    for c in range(n):
        if r >= m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        if a[r, c] != 1:
            inv = _modinv(a[r, c], p)
            for j in range(c, n):
                a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, n):
                    tmp = (a[i, j] - f * a[r, j]) % p
                    if tmp < 0:
                        tmp += p
                    a[i, j] = tmp
        pivots.append(c)
        r += 1
    return r, pivots
