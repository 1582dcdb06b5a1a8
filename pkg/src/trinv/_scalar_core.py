"""Scalar recurrences shared verbatim by the numba and numpy backends.

Everything in this module is nopython-compilable.  The numba backend inlines
these bodies into its compiled kernels (``register_jitable``), the numpy
backend calls them as plain Python; a single source keeps both backends
bit-identical on the delicate extended-real arithmetic.

Conventions used throughout:

* bands arrive padded for 1-based indexing (``TridiagonalMatrix.padded_bands``):
  ``dg[k] = a[k,k]``, ``lo[k] = a[k+1,k]``, ``up[k] = a[k,k+1]``, out-of-range
  slots zero;
* ratio arrays have length n+1, unused slots hold 0.0, and no slot is NaN;
* ``ops`` counts executed multiplications and divisions only.  ``term`` adds
  one multiply when its first factor is non-zero; ``ext_div`` adds one divide
  when its numerator is non-zero (a zero numerator short-circuits).
"""

import numpy as np

try:
    from numba.extending import register_jitable
except ImportError:  # pragma: no cover - only hit when numba is absent
    def register_jitable(*args, **kwargs):
        if args and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap


@register_jitable
def ext_div(num, den):
    """Extended-real division.

    ``c/0`` is ``sign(c) * inf`` (the sign comes from the numerator, so a
    negative-zero denominator behaves like unsigned zero), a ``0/0`` form
    evaluates to 0, and ``c/inf`` is 0.  Never returns NaN for non-NaN input.
    """
    if num == 0.0:
        return 0.0
    if den == 0.0:
        if num > 0.0:
            return np.inf
        return -np.inf
    return num / den + 0.0


@register_jitable
def term(a, rho):
    """Product ``a * rho`` with the convention that a zero factor wins.

    Returns exactly 0.0 when ``a == 0`` even if ``rho`` is infinite, which is
    what makes the transient-pivot sums total on the extended reals.
    """
    if a == 0.0:
        return 0.0
    return a * rho


@register_jitable
def ratio_sweeps(dg, lo, up):
    """All four ratio sequences of the inverse, by the stabilized recursions.

    Forward sweep: ``s_k = a[k,k] + a[k-1,k] q_k`` (a transient, not stored),
    ``q_{k+1} = -a[k+1,k]/s_k`` and ``r_hat_{k+1} = -a[k,k+1]/s_k``.  Backward
    sweep: ``t_k = a[k,k] + a[k,k+1] r_k``, ``q_hat_{k-1} = -a[k-1,k]/t_k`` and
    ``r_{k-1} = -a[k,k-1]/t_k``.  The zero padding of the bands makes the
    printed starting values the k=1 and k=n instances of the general step.

    Returns ``(q, r, q_hat, r_hat, ops)``; valid slots are ``q[2..n]``,
    ``r[1..n-1]``, ``q_hat[1..n-1]``, ``r_hat[2..n]``.
    """
    n = dg.shape[0] - 1
    q = np.zeros(n + 1)
    r = np.zeros(n + 1)
    qh = np.zeros(n + 1)
    rh = np.zeros(n + 1)
    ops = 0
    for k in range(1, n):
        s = dg[k] + term(up[k - 1], q[k])
        if up[k - 1] != 0.0:
            ops += 1
        q[k + 1] = ext_div(-lo[k], s)
        if lo[k] != 0.0:
            ops += 1
        rh[k + 1] = ext_div(-up[k], s)
        if up[k] != 0.0:
            ops += 1
    for k in range(n, 1, -1):
        t = dg[k] + term(up[k], r[k])
        if up[k] != 0.0:
            ops += 1
        qh[k - 1] = ext_div(-up[k - 1], t)
        if up[k - 1] != 0.0:
            ops += 1
        r[k - 1] = ext_div(-lo[k - 1], t)
        if lo[k - 1] != 0.0:
            ops += 1
    return q, r, qh, rh, ops


@register_jitable
def ratio_seed(dg, up, q, n):
    """Trailing diagonal entry ``x[n,n] = 1/(a[n-1,n] q_n + a[n,n])``.

    Uses the ``term`` rule, so an infinite ``q_n`` (with its guaranteed
    non-zero ``a[n-1,n]``) drives the seed to exactly 0.
    """
    den = term(up[n - 1], q[n]) + dg[n]
    ops = 1
    if up[n - 1] != 0.0:
        ops += 1
    return ext_div(1.0, den), ops


@register_jitable
def ext_lower_boundary(dg, lo, up, q, r, qh, rh, Xp, k, n):
    """``x[k,k-1]`` when ``q_k`` is infinite and the column jump misses it.

    The chain of fallbacks reads, in order: the row ratio below, the
    three-term relation two rows below, the mirrored ratio pair through the
    diagonal, the mirrored three-term relation, and finally the bare
    equation ``a[k-1,k] x[k,k-1] = 1`` that remains when everything else in
    the column's defining equations vanished.
    """
    if k == n:
        return ext_div(1.0, up[n - 1]), 1
    if r[k] != 0.0:
        return Xp[k + 1, k - 1] / r[k], 1
    if lo[k] != 0.0:
        return -(up[k + 1] / lo[k]) * Xp[k + 2, k - 1], 2
    if qh[k] != 0.0:
        return (ext_div(-up[k], up[k - 1]) / qh[k]) * Xp[k + 1, k + 1], 3
    if up[k] != 0.0:
        return ext_div(up[k + 1], up[k - 1]) * Xp[k + 2, k + 1], 2
    return ext_div(1.0, up[k - 1]), 1


@register_jitable
def ext_diag(dg, lo, up, q, r, qh, rh, Xp, k):
    """``x[k-1,k-1]`` once column k-1's sub-diagonal part is in place.

    Fallback order: row ratio, mirrored ratio pair, the row's three-term
    relation, the column's three-term relation through the ratio pair, and
    the bare seed ``1/(a[k-2,k-1] q_{k-1} + a[k-1,k-1])`` of a decoupled
    leading block (the zero padding makes it ``1/a[1,1]`` at k=2).
    """
    if r[k - 1] != 0.0:
        return Xp[k, k - 1] / r[k - 1], 1
    if qh[k - 1] != 0.0:
        return (rh[k] / qh[k - 1]) * Xp[k, k], 2
    if lo[k - 1] != 0.0:
        return -(up[k] / lo[k - 1]) * Xp[k + 1, k - 1], 2
    if up[k - 1] != 0.0:
        return (-(up[k] / up[k - 1]) * rh[k]) * Xp[k + 1, k], 3
    den = dg[k - 1] + term(up[k - 2], q[k - 1])
    ops = 1
    if up[k - 2] != 0.0:
        ops += 1
    return ext_div(1.0, den), ops


@register_jitable
def ext_upper_boundary(dg, lo, up, q, r, qh, rh, Xp, k):
    """``x[k,k+1]`` when ``q_hat_k`` is infinite; mirror of the lower case."""
    if k == 1:
        return ext_div(up[1], lo[1]) * Xp[2, 1], 2
    if rh[k] != 0.0:
        return Xp[k - 1, k + 1] / rh[k], 1
    if up[k - 1] != 0.0:
        return -(lo[k - 2] / up[k - 1]) * Xp[k - 2, k + 1], 2
    if q[k] != 0.0:
        return (ext_div(-lo[k - 1], lo[k]) / q[k]) * Xp[k - 1, k - 1], 3
    if lo[k - 1] != 0.0:
        return ext_div(lo[k - 2], lo[k]) * Xp[k - 2, k - 1], 2
    return ext_div(up[k], lo[k]) * Xp[k + 1, k], 2


@register_jitable
def miller_recurrence(dg, lo, up):
    """Backward single-column recurrence ``y_0 = 0, y_1 = 1, ...``.

    ``y_{k+1} = -(a[k,k-1] y_{k-1} + a[k,k] y_k) / a[k,k+1]`` for k < n, then
    the normalizer ``f = 1/(a[n,n-1] y_{n-1} + a[n,n] y_n)``.  The caller must
    ensure the super-diagonal is non-zero; overflow shows up as non-finite
    ``y`` or ``f`` and is the caller's to detect.
    """
    n = dg.shape[0] - 1
    y = np.zeros(n + 1)
    y[0] = 0.0
    y[1] = 1.0
    ops = 0
    for k in range(1, n):
        y[k + 1] = -(lo[k - 1] * y[k - 1] + dg[k] * y[k]) / up[k]
        ops += 3
    den = lo[n - 1] * y[n - 1] + dg[n] * y[n]
    ops += 2
    f = ext_div(1.0, den)
    ops += 1
    return y, f, ops


@register_jitable
def lewis_scalars(dg, lo, up):
    """The three scalar sequences and corner element of the rank-one formulas.

    ``zhat`` runs backward from ``zhat_n = 1``, ``z`` forward from ``z_1 = 1``,
    ``e`` accumulates the sub/super products, and
    ``x1n = 1/(a[1,1] zhat_1 + a[2,1] zhat_2)`` is the top-right inverse entry.
    Arrays are 1-based padded (slot 0 unused).
    """
    n = dg.shape[0] - 1
    zhat = np.zeros(n + 1)
    z = np.zeros(n + 1)
    e = np.zeros(n + 1)
    ops = 0
    zhat[n] = 1.0
    zhat[n - 1] = -(dg[n] / up[n - 1])
    ops += 1
    for k in range(n - 1, 1, -1):
        zhat[k - 1] = -(dg[k] / up[k - 1]) * zhat[k] - (lo[k] / up[k - 1]) * zhat[k + 1]
        ops += 4
    z[1] = 1.0
    z[2] = -(dg[1] / lo[1])
    ops += 1
    for k in range(2, n):
        z[k + 1] = -(dg[k] / lo[k]) * z[k] - (up[k - 1] / lo[k]) * z[k - 1]
        ops += 4
    e[1] = 1.0
    for k in range(1, n):
        e[k + 1] = (lo[k] / up[k]) * e[k]
        ops += 2
    den = dg[1] * zhat[1] + lo[1] * zhat[2]
    ops += 2
    x1n = ext_div(1.0, den)
    ops += 1
    return zhat, z, e, x1n, ops


@register_jitable
def twoway_fast_scalars(dg, lo, up):
    """Column scale factors of the fast two-way scheme.

    ``zhat_n = 1`` with ``zhat_{k-1} = -(a[k,k]/a[k-1,k]) zhat_k
    - (a[k+1,k]/a[k-1,k]) zhat_{k+1}`` computed down to ``zhat_2`` (column 1
    comes from its own backward column), and the mirrored ``z`` up to
    ``z_{n-1}``.
    """
    n = dg.shape[0] - 1
    zhat = np.zeros(n + 1)
    z = np.zeros(n + 1)
    ops = 0
    zhat[n] = 1.0
    if n >= 2:
        zhat[n - 1] = -(dg[n] / up[n - 1])
        ops += 1
    for k in range(n - 1, 2, -1):
        zhat[k - 1] = -(dg[k] / up[k - 1]) * zhat[k] - (lo[k] / up[k - 1]) * zhat[k + 1]
        ops += 4
    z[1] = 1.0
    if n >= 3:
        z[2] = -(dg[1] / lo[1])
        ops += 1
    for k in range(2, n - 1):
        z[k + 1] = -(dg[k] / lo[k]) * z[k] - (up[k - 1] / lo[k]) * z[k - 1]
        ops += 4
    return zhat, z, ops
