"""Rank of sparse matrices over GF(p).

Vectors are dicts ``{column: value}``. Elimination keeps one pivot row per
leading column and processes the shortest rows first, which keeps fill-in
low on the +-1 boundary matrices the oracle produces.
"""

from __future__ import annotations

import numpy as np


def sparse_rank(rows, p):
    """Rank of the matrix whose rows are the dicts in ``rows``."""
    pivots = {}
    for row in sorted(rows, key=len):
        v = {c: x % p for c, x in row.items() if x % p}
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(v[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in v.items()}
                break
            f = v[c]
            for k, x in piv.items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)


def dense_rank(a, p):
    """Rank of an integer numpy matrix mod p by row reduction (p < 2**31)."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def rank_mod_p(rows, ncols, p):
    """Dispatch on size: sparse elimination, or dense for small square-ish blocks."""
    if not rows or ncols == 0:
        return 0
    nnz = sum(len(r) for r in rows)
    if len(rows) * ncols <= 250_000 and nnz * 8 > len(rows) * ncols:
        a = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, row in enumerate(rows):
            for c, x in row.items():
                a[i, c] = x
        return dense_rank(a, p)
    return sparse_rank(rows, p)
