"""Inversion through the ratio sequences of the inverse.

The inverse of a nonsingular tridiagonal matrix has rank-one triangles, so
adjacent columns (rows) are proportional below (above) the diagonal.  The
four proportionality sequences

* ``q[k]``     column ratio ``x[s, k-1] / x[s, k]`` for s >= k,
* ``r[k]``     row ratio ``x[k+1, s] / x[k, s]`` for s <= k,
* ``q_hat[k]`` column ratio ``x[s, k+1] / x[s, k]`` for s <= k,
* ``r_hat[k]`` row ratio ``x[k-1, s] / x[k, s]`` for s >= k,

are computed directly from the bands by stable two-term recursions on the
extended reals (no inverse entry is formed), and the inverse is then filled
column by column in O(n^2) multiplications.  ``invert_ratio_basic`` is the
plain scheme that requires every ratio finite and non-zero;
``invert_ratio_extended`` handles arbitrary nonsingular input by jumping
over infinite ratios with dedicated boundary formulas, and reproduces the
exact zero blocks of the inverse.
"""

from dataclasses import dataclass

import numpy as np

from . import backends
from .core import DenseMatrix, TridiagonalMatrix, _unpad_entries
from .errors import NotApplicableError, SingularMatrixError

__all__ = [
    "RatioSet",
    "ZeroStructure",
    "compute_ratios",
    "compute_ratios_counted",
    "invert_ratio_basic",
    "invert_ratio_basic_counted",
    "invert_ratio_extended",
    "invert_ratio_extended_counted",
    "predict_zero_structure",
]

ZERO_CASE_TAGS = ("sub-gap", "super-gap", "q-infinite", "r-infinite")


@dataclass(frozen=True)
class RatioSet:
    """The four ratio sequences, padded for 1-based indexing.

    Each array has length n+1; the meaningful slots are ``q[2..n]``,
    ``r[1..n-1]``, ``q_hat[1..n-1]`` and ``r_hat[2..n]``.  Values live on the
    extended reals (``inf`` marks a zero divider inside the inverse); no slot
    is ever NaN.  Unused slots hold 0.0.
    """

    n: int
    q: np.ndarray
    r: np.ndarray
    q_hat: np.ndarray
    r_hat: np.ndarray


@dataclass(frozen=True)
class ZeroStructure:
    """Predicted exact-zero pattern of the inverse, straight from the ratios.

    ``predicted_zero`` is an (n, n) boolean array, True where the inverse
    entry is exactly zero.  ``tags`` maps each tag in ``ZERO_CASE_TAGS`` to
    the boolean mask that cause contributes; a position is predicted zero iff
    at least one tag marks it:

    * ``sub-gap``:    ``a[k+1, k] == 0`` zeroes rows k+1..n of columns 1..k;
    * ``super-gap``:  ``a[k-1, k] == 0`` zeroes rows 1..k-1 of columns k..n;
    * ``q-infinite``: ``q[k] == +-inf`` zeroes column k from row k down and
      row k from column k right;
    * ``r-infinite``: ``r[k] == +-inf`` zeroes row k up to column k and
      column k up to row k.
    """

    n: int
    predicted_zero: np.ndarray
    tags: dict


def _lock(arr):
    arr.flags.writeable = False
    return arr


def compute_ratios(A: TridiagonalMatrix) -> RatioSet:
    """Ratio sequences of ``inv(A)`` for any tridiagonal A of order >= 2.

    Never fails on finite bands: a singular matrix still has well-defined
    ratio recursions (the fill stage is where singularity surfaces).
    """
    ratios, _ = compute_ratios_counted(A)
    return ratios


def compute_ratios_counted(A: TridiagonalMatrix):
    """Like :func:`compute_ratios`, also returning the multiply/divide count."""
    if A.n < 2:
        raise ValueError("ratio sequences need a matrix of order at least 2")
    dg, lo, up = A.padded_bands()
    q, r, qh, rh, ops = backends.active().ratio_sweeps(dg, lo, up)
    ratios = RatioSet(n=A.n, q=_lock(q), r=_lock(r), q_hat=_lock(qh), r_hat=_lock(rh))
    return ratios, int(ops)


def _basic_applicable(ratios: RatioSet):
    n = ratios.n
    q = ratios.q[2 : n + 1]
    r = ratios.r[1:n]
    all_ratios = (q, r, ratios.q_hat[1:n], ratios.r_hat[2 : n + 1])
    if not all(np.isfinite(part).all() for part in all_ratios):
        return "an infinite ratio"
    if (q == 0.0).any() or (r == 0.0).any():
        return "a zero ratio"
    return None


def invert_ratio_basic(A: TridiagonalMatrix) -> DenseMatrix:
    """Plain ratio fill; requires every q and r finite and non-zero.

    Raises
    ------
    NotApplicableError
        If the order is 1 or any ratio is zero or infinite (equivalently,
        some inverse entry in the ratio chains is zero).
    SingularMatrixError
        If the trailing diagonal seed has a zero denominator.
    """
    X, _ = invert_ratio_basic_counted(A)
    return X


def invert_ratio_basic_counted(A: TridiagonalMatrix):
    n = A.n
    if n < 2:
        raise NotApplicableError("the plain ratio fill needs order at least 2")
    ratios, ops = compute_ratios_counted(A)
    reason = _basic_applicable(ratios)
    if reason is not None:
        raise NotApplicableError(
            f"the plain ratio fill does not apply: {reason} occurs "
            "(use the extended fill)"
        )
    dg, lo, up = A.padded_bands()
    Xp, fill_ops = backends.active().ratio_basic_fill(dg, lo, up, ratios.q, ratios.r)
    X = _unpad_entries(Xp, n)
    del Xp
    if not np.isfinite(X).all():
        raise SingularMatrixError("matrix is singular: the fill produced non-finite entries")
    return DenseMatrix(X), ops + int(fill_ops)


def invert_ratio_extended(A: TridiagonalMatrix) -> DenseMatrix:
    """Invert any nonsingular tridiagonal matrix through its ratio sequences.

    Infinite ratios (exact zeros inside the inverse) are handled by skip
    formulas, so the only failure mode is a genuinely singular matrix.

    Raises
    ------
    SingularMatrixError
        If a non-finite entry is produced, which for finite input happens
        exactly when A is singular.
    """
    X, _ = invert_ratio_extended_counted(A)
    return X


def invert_ratio_extended_counted(A: TridiagonalMatrix):
    n = A.n
    if n == 1:
        d = float(A.diag[0])
        if d == 0.0:
            raise SingularMatrixError("matrix is singular: zero 1x1 diagonal")
        return DenseMatrix(np.array([[1.0 / d]])), 1
    ratios, ops = compute_ratios_counted(A)
    dg, lo, up = A.padded_bands()
    Xp, fill_ops = backends.active().ratio_ext_fill(
        dg, lo, up, ratios.q, ratios.r, ratios.q_hat, ratios.r_hat
    )
    X = _unpad_entries(Xp, n)
    # At n ~ 10^4 the padded workspace and the result copy are ~800 MB each;
    # keep only one of them alive past this point.
    del Xp
    if not np.isfinite(X).all():
        raise SingularMatrixError("matrix is singular: the fill produced non-finite entries")
    return DenseMatrix(X), ops + int(fill_ops)


def predict_zero_structure(A: TridiagonalMatrix, ratios: RatioSet = None) -> ZeroStructure:
    """Predict the exact zeros of ``inv(A)`` from the bands and ratios alone.

    For nonsingular A the predicted pattern is exhaustive: entries are zero
    if and only if some mask marks them.  Pass ``ratios`` to reuse an
    existing :class:`RatioSet`; otherwise one is computed (order >= 2).
    """
    n = A.n
    if ratios is None and n >= 2:
        ratios = compute_ratios(A)
    tags = {tag: np.zeros((n, n), dtype=bool) for tag in ZERO_CASE_TAGS}
    sub_gap = tags["sub-gap"]
    super_gap = tags["super-gap"]
    for k in range(1, n):  # cut position, 1-based
        if A.lower[k - 1] == 0.0:
            sub_gap[k:, :k] = True
        if A.upper[k - 1] == 0.0:
            super_gap[:k, k:] = True
    if ratios is not None:
        q_inf = tags["q-infinite"]
        for k in range(2, n + 1):
            if np.isinf(ratios.q[k]):
                q_inf[k - 1 :, k - 1] = True
                q_inf[k - 1, k - 1 :] = True
        r_inf = tags["r-infinite"]
        for k in range(1, n):
            if np.isinf(ratios.r[k]):
                r_inf[k - 1, :k] = True
                r_inf[:k, k - 1] = True
    predicted = np.zeros((n, n), dtype=bool)
    for mask in tags.values():
        predicted |= mask
        _lock(mask)
    return ZeroStructure(n=n, predicted_zero=_lock(predicted), tags=tags)
