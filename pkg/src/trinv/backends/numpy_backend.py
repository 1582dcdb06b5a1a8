"""Pure numpy fill kernels.

Column-at-a-time vectorizations of the same recursions the numba backend
runs element by element.  Per-element arithmetic (operand order included) is
identical, and the scalar recurrences are the exact same code from
``trinv._scalar_core``, so results match the numba backend bit for bit.
Operation counts tally the slice lengths and match too.
"""

import numpy as np

from .. import _scalar_core as _sc

ratio_sweeps = _sc.ratio_sweeps


def miller_column(dg, lo, up):
    n = dg.shape[0] - 1
    y, f, ops = _sc.miller_recurrence(dg, lo, up)
    col = np.zeros(n + 1)
    col[1:] = f * y[1:]
    ops += n
    return col, y, f, ops


def naive_fill(dg, lo, up, coln):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    Xp[1 : n + 1, n] = coln[1:]
    basis = np.zeros(n + 2)
    ops = 0
    for k in range(n, 1, -1):
        basis[k] = 1.0
        Xp[1 : n + 1, k - 1] = (
            basis[1 : n + 1] - dg[k] * Xp[1 : n + 1, k] - lo[k] * Xp[1 : n + 1, k + 1]
        ) / up[k - 1]
        basis[k] = 0.0
        ops += 3 * n
    return Xp, ops


def two_way_fill(dg, lo, up, col1, coln):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    Xp[1 : n + 1, 1] = col1[1:]
    Xp[1 : n + 1, n] = coln[1:]
    ops = 0
    for k in range(n, 2, -1):
        if k == n:
            c1 = -(dg[n] / up[n - 1])
            Xp[1:n, n - 1] = c1 * Xp[1:n, n]
            ops += 1 + (n - 1)
        else:
            c1 = -(dg[k] / up[k - 1])
            c2 = -(lo[k] / up[k - 1])
            Xp[1:k, k - 1] = c1 * Xp[1:k, k] + c2 * Xp[1:k, k + 1]
            ops += 2 + 2 * (k - 1)
    for k in range(1, n - 1):
        if k == 1:
            c1 = -(dg[1] / lo[1])
            Xp[3 : n + 1, 2] = c1 * Xp[3 : n + 1, 1]
            ops += 1 + (n - 2)
        else:
            c1 = -(dg[k] / lo[k])
            c2 = -(up[k - 1] / lo[k])
            Xp[k + 2 : n + 1, k + 1] = c1 * Xp[k + 2 : n + 1, k] + c2 * Xp[k + 2 : n + 1, k - 1]
            ops += 2 + 2 * (n - k - 1)
    return Xp, ops


def two_way_fast_fill(dg, lo, up, col1, coln):
    n = dg.shape[0] - 1
    zhat, z, ops = _sc.twoway_fast_scalars(dg, lo, up)
    Xp = np.zeros((n + 2, n + 2))
    Xp[1 : n + 1, 1] = col1[1:]
    Xp[1 : n + 1, n] = coln[1:]
    for k in range(n, 2, -1):
        Xp[1:k, k - 1] = zhat[k - 1] * Xp[1:k, n]
        ops += k - 1
    for k in range(1, n - 1):
        Xp[k + 2 : n + 1, k + 1] = z[k + 1] * Xp[k + 2 : n + 1, 1]
        ops += n - k - 1
    return Xp, zhat, z, ops


def lewis_fill(dg, lo, up):
    n = dg.shape[0] - 1
    zhat, z, e, x1n, ops = _sc.lewis_scalars(dg, lo, up)
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    u[1:] = e[1:] * z[1:] * x1n
    v[1:] = e[1:] * zhat[1:] * x1n
    ops += 4 * n
    Xp = np.zeros((n + 2, n + 2))
    for k in range(1, n + 1):
        Xp[1 : k + 1, k] = u[1 : k + 1] * zhat[k]
        Xp[k + 1 : n + 1, k] = v[k + 1 : n + 1] * z[k]
        ops += n
    return Xp, zhat, z, e, x1n, ops


def ratio_basic_fill(dg, lo, up, q, r):
    n = dg.shape[0] - 1
    Xp = np.zeros((n + 2, n + 2))
    seed, ops = _sc.ratio_seed(dg, up, q, n)
    Xp[n, n] = seed
    for k in range(n, 1, -1):
        Xp[k : n + 1, k - 1] = q[k] * Xp[k : n + 1, k]
        Xp[k - 1, k - 1] = Xp[k, k - 1] / r[k - 1]
        ops += (n - k + 1) + 1
    for k in range(1, n):
        c = up[k] * r[k] / lo[k]
        Xp[1 : k + 1, k + 1] = c * Xp[1 : k + 1, k]
        ops += 2 + k
    return Xp, ops


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
                Xp[k + 1 : n + 1, k - 1] = c * Xp[k + 1 : n + 1, k + 1]
                ops += 1 + (n - k)
            bval, bops = _sc.ext_lower_boundary(dg, lo, up, q, r, qh, rh, Xp, k, n)
            Xp[k, k - 1] = bval
            ops += bops
        else:
            Xp[k : n + 1, k - 1] = qk * Xp[k : n + 1, k]
            ops += n - k + 1
        dval, dops = _sc.ext_diag(dg, lo, up, q, r, qh, rh, Xp, k)
        Xp[k - 1, k - 1] = dval
        ops += dops
    for k in range(1, n):
        qhk = qh[k]
        if np.isinf(qhk):
            if k > 1:
                c = _sc.ext_div(-up[k - 1], lo[k])
                Xp[1:k, k + 1] = c * Xp[1:k, k - 1]
                ops += 1 + (k - 1)
            bval, bops = _sc.ext_upper_boundary(dg, lo, up, q, r, qh, rh, Xp, k)
            Xp[k, k + 1] = bval
            ops += bops
        else:
            Xp[1 : k + 1, k + 1] = qhk * Xp[1 : k + 1, k]
            ops += k
    return Xp, ops
