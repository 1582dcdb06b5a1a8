"""numba-compiled fill kernels.

Each kernel is an explicit-loop transcription of the corresponding recursion;
the scalar steps live in ``trinv._scalar_core`` and are inlined by numba.
Kernels run to completion even when values overflow to inf or NaN, so the
operation counts they report are deterministic; validation and error raising
happen in the python wrappers.
"""

import numpy as np
from numba import njit

from .. import _scalar_core as _sc


@njit(cache=True)
def ratio_sweeps(dg, lo, up):
    return _sc.ratio_sweeps(dg, lo, up)


@njit(cache=True)
def miller_column(dg, lo, up):
    n = dg.shape[0] - 1
    y, f, ops = _sc.miller_recurrence(dg, lo, up)
    col = np.zeros(n + 1)
    for k in range(1, n + 1):
        col[k] = f * y[k]
        ops += 1
    return col, y, f, ops


@njit(cache=True)
def naive_fill(dg, lo, up, coln):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    for s in range(1, n + 1):
        Xp[s, n] = coln[s]
    ops = 0
    for k in range(n, 1, -1):
        for j in range(1, n + 1):
            e = 1.0 if j == k else 0.0
            Xp[j, k - 1] = (e - dg[k] * Xp[j, k] - lo[k] * Xp[j, k + 1]) / up[k - 1]
            ops += 3
    return Xp, ops


@njit(cache=True)
def two_way_fill(dg, lo, up, col1, coln):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    for s in range(1, n + 1):
        Xp[s, 1] = col1[s]
        Xp[s, n] = coln[s]
    ops = 0
    for k in range(n, 2, -1):
        if k == n:
            c1 = -(dg[n] / up[n - 1])
            ops += 1
            for s in range(1, n):
                Xp[s, n - 1] = c1 * Xp[s, n]
                ops += 1
        else:
            c1 = -(dg[k] / up[k - 1])
            c2 = -(lo[k] / up[k - 1])
            ops += 2
            for s in range(1, k):
                Xp[s, k - 1] = c1 * Xp[s, k] + c2 * Xp[s, k + 1]
                ops += 2
    for k in range(1, n - 1):
        if k == 1:
            c1 = -(dg[1] / lo[1])
            ops += 1
            for s in range(3, n + 1):
                Xp[s, 2] = c1 * Xp[s, 1]
                ops += 1
        else:
            c1 = -(dg[k] / lo[k])
            c2 = -(up[k - 1] / lo[k])
            ops += 2
            for s in range(k + 2, n + 1):
                Xp[s, k + 1] = c1 * Xp[s, k] + c2 * Xp[s, k - 1]
                ops += 2
    return Xp, ops


@njit(cache=True)
def two_way_fast_fill(dg, lo, up, col1, coln):
    n = dg.shape[0] - 1
    zhat, z, ops = _sc.twoway_fast_scalars(dg, lo, up)
    Xp = np.zeros((n + 2, n + 2))
    for s in range(1, n + 1):
        Xp[s, 1] = col1[s]
        Xp[s, n] = coln[s]
    for k in range(n, 2, -1):
        for s in range(1, k):
            Xp[s, k - 1] = zhat[k - 1] * Xp[s, n]
            ops += 1
    for k in range(1, n - 1):
        for s in range(k + 2, n + 1):
            Xp[s, k + 1] = z[k + 1] * Xp[s, 1]
            ops += 1
    return Xp, zhat, z, ops


@njit(cache=True)
def lewis_fill(dg, lo, up):
    n = dg.shape[0] - 1
    zhat, z, e, x1n, ops = _sc.lewis_scalars(dg, lo, up)
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    for s in range(1, n + 1):
        u[s] = e[s] * z[s] * x1n
        v[s] = e[s] * zhat[s] * x1n
        ops += 4
    Xp = np.zeros((n + 2, n + 2))
    for k in range(1, n + 1):
        for s in range(1, k + 1):
            Xp[s, k] = u[s] * zhat[k]
            ops += 1
        for s in range(k + 1, n + 1):
            Xp[s, k] = v[s] * z[k]
            ops += 1
    return Xp, zhat, z, e, x1n, ops


@njit(cache=True)
def ratio_basic_fill(dg, lo, up, q, r):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    seed, ops = _sc.ratio_seed(dg, up, q, n)
    Xp[n, n] = seed
    for k in range(n, 1, -1):
        qk = q[k]
        for s in range(k, n + 1):
            Xp[s, k - 1] = qk * Xp[s, k]
            ops += 1
        Xp[k - 1, k - 1] = Xp[k, k - 1] / r[k - 1]
        ops += 1
    for k in range(1, n):
        c = up[k] * r[k] / lo[k]
        ops += 2
        for s in range(1, k + 1):
            Xp[s, k + 1] = c * Xp[s, k]
            ops += 1
    return Xp, ops


@njit(cache=True)
def ratio_ext_fill(dg, lo, up, q, r, qh, rh):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    seed, ops = _sc.ratio_seed(dg, up, q, n)
    Xp[n, n] = seed
    for k in range(n, 1, -1):
        qk = q[k]
        if np.isinf(qk):
            if k < n:
                c = _sc.ext_div(-lo[k], up[k - 1])
                ops += 1
                for s in range(k + 1, n + 1):
                    Xp[s, k - 1] = c * Xp[s, k + 1]
                    ops += 1
            bval, bops = _sc.ext_lower_boundary(dg, lo, up, q, r, qh, rh, Xp, k, n)
            Xp[k, k - 1] = bval
            ops += bops
        else:
            for s in range(k, n + 1):
                Xp[s, k - 1] = qk * Xp[s, k]
                ops += 1
        dval, dops = _sc.ext_diag(dg, lo, up, q, r, qh, rh, Xp, k)
        Xp[k - 1, k - 1] = dval
        ops += dops
    for k in range(1, n):
        qhk = qh[k]
        if np.isinf(qhk):
            if k > 1:
                c = _sc.ext_div(-up[k - 1], lo[k])
                ops += 1
                for s in range(1, k):
                    Xp[s, k + 1] = c * Xp[s, k - 1]
                    ops += 1
            bval, bops = _sc.ext_upper_boundary(dg, lo, up, q, r, qh, rh, Xp, k)
            Xp[k, k + 1] = bval
            ops += bops
        else:
            for s in range(1, k + 1):
                Xp[s, k + 1] = qhk * Xp[s, k]
                ops += 1
    return Xp, ops
