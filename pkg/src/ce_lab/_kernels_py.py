"""Reference row-reduction kernels on integer matrices.

Both routines work on int64 numpy arrays and return an augmented-style
result: the reduced rows together with the transform rows expressing
them as combinations of the input rows.  The compiled backend mirrors
these signatures exactly.
"""

from __future__ import annotations

from math import gcd

import numpy as np

BACKEND_NAME = "python"


def gcd_ext(a, b, n):
    """Extended gcd packaged as a unimodular 2x2 row operation mod n.

    Returns (g, s, t, u, v) with s*a + t*b = g = gcd(a, b) and
    u*a + v*b = 0, where the matrix [[s, t], [u, v]] has determinant
    1 mod n, so applying it to a row pair preserves the row span.
    """
    a %= n
    b %= n
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g = old_r
    if g == 0:
        return 0, 1, 0, 0, 1
    return g, old_s % n, old_t % n, (-(b // g)) % n, (a // g) % n


def unit(a, n):
    """A unit u mod n with u*a = gcd(a, n) mod n."""
    a %= n
    if a == 0:
        return 1
    g = gcd(a, n)
    m = n // g
    h = a // g
    u0 = pow(h, -1, m) if m > 1 else 1
    u = u0
    while gcd(u, n) != 1:
        u += m
    return u % n


def ann(b, n):
    """Generator of the annihilator of b mod n."""
    return (n // gcd(b, n)) % n


def rref_mod_p(a, p):
    """Reduced row echelon form over F_p.

    Returns (h, u, pivots) with h = u @ a mod p, zero rows of h at the
    bottom, and pivots listing the pivot column of each nonzero row.
    """
    a = np.asarray(a, dtype=np.int64) % p
    m, k = a.shape
    aug = np.concatenate([a, np.eye(m, dtype=np.int64)], axis=1)
    r = 0
    pivots = []
    for c in range(k):
        if r == m:
            break
        nz = np.nonzero(aug[r:, c])[0]
        if nz.size == 0:
            continue
        j = r + int(nz[0])
        if j != r:
            aug[[r, j]] = aug[[j, r]]
        inv = pow(int(aug[r, c]), p - 2, p)
        if inv != 1:
            aug[r] = (aug[r] * inv) % p
        col = aug[:, c].copy()
        col[r] = 0
        if np.any(col):
            aug -= np.outer(col, aug[r])
            aug %= p
        pivots.append(c)
        r += 1
    return aug[:, :k], aug[:, k:], pivots


def howell_mod_n(a, n):
    """Howell normal form over Z/nZ with transform and annihilator rows.

    Returns (h, u, pivots) with h = u @ a mod n.  h may have more rows
    than a: eliminating a pivot whose annihilator is nonzero appends the
    annihilator multiple of that row so the span property holds.  Rows
    reduced to zero sit at the bottom; their transform rows generate all
    row-combination relations of the input.
    """
    a = np.asarray(a, dtype=np.int64) % n
    m, k = a.shape
    rows = [np.concatenate([a[i], np.eye(m, dtype=np.int64)[i]])
            for i in range(m)]
    r = 0
    pivots = []
    for c in range(k):
        pivot = None
        for j in range(r, len(rows)):
            if rows[j][c] % n:
                pivot = j
                break
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
        for j in range(r + 1, len(rows)):
            if rows[j][c] % n:
                g, s, t, uu, vv = gcd_ext(int(rows[r][c]), int(rows[j][c]), n)
                new_r = (s * rows[r] + t * rows[j]) % n
                new_j = (uu * rows[r] + vv * rows[j]) % n
                rows[r], rows[j] = new_r, new_j
        w = unit(int(rows[r][c]), n)
        if w != 1:
            rows[r] = (w * rows[r]) % n
        d = int(rows[r][c])
        for j in range(r):
            if rows[j][c]:
                q = int(rows[j][c]) // d
                if q:
                    rows[j] = (rows[j] - q * rows[r]) % n
        x = ann(d, n)
        if x:
            extra = (x * rows[r]) % n
            if np.any(extra):
                # appended rows need transform width for the grown matrix
                rows.append(extra)
        pivots.append(c)
        r += 1
    # transform entries of appended rows refer to original inputs only,
    # so the transform block stays m wide
    h = np.array([row[:k] for row in rows], dtype=np.int64).reshape(len(rows), k)
    u = np.array([row[k:] for row in rows], dtype=np.int64).reshape(len(rows), m)
    # move rows with zero reduced part to the bottom, preserving order
    nonzero = [i for i in range(len(rows)) if np.any(h[i])]
    zero = [i for i in range(len(rows)) if not np.any(h[i])]
    order = nonzero + zero
    return h[order], u[order], pivots[: len(nonzero)]


def mat_mul_mod(a, b, n):
    """(a @ b) mod n on int64 arrays."""
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % n
