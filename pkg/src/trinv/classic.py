"""Recursive inversion methods built on three-term column recurrences.

The single-column backward recurrence (:func:`miller_column`), the naive
whole-matrix backward recursion (:func:`invert_naive`), the two-way scheme
that recurses towards the diagonal from both ends (:func:`invert_two_way`,
with a fast scalar-scaling variant), the rank-one factor formulas of
:func:`invert_lewis`, and the block variant :func:`invert_lewis_block` that
splits at zero off-diagonal entries.

All of these can overflow on matrices whose recurrences grow geometrically;
overflow is detected (non-finite workspace or output values) and reported as
:class:`~trinv.errors.RecurrenceOverflowError` rather than returned as a
poisoned matrix.
"""

from dataclasses import dataclass

import numpy as np

from . import backends
from .core import DenseMatrix, TridiagonalMatrix, _unpad_entries, make_tridiagonal
from .errors import (
    NotApplicableError,
    RecurrenceOverflowError,
    SingularMatrixError,
    ZeroOffDiagonalError,
)

__all__ = [
    "MillerWorkspace",
    "LewisWorkspace",
    "BlockSplit",
    "miller_column",
    "miller_workspace",
    "invert_naive",
    "invert_naive_counted",
    "invert_two_way",
    "invert_two_way_counted",
    "two_way_diagonal_gap",
    "lewis_workspace",
    "invert_lewis",
    "invert_lewis_counted",
    "find_block_split",
    "invert_lewis_block",
    "invert_lewis_block_counted",
]


@dataclass(frozen=True)
class MillerWorkspace:
    """Intermediates of the backward column recurrence.

    ``y`` has length n+1 holding ``y_0 = 0, y_1 = 1, ..., y_n``; ``f`` is the
    normalizing factor, so the column is ``f * y[1:]``.  For ``end='first'``
    these belong to the index-reversed matrix the recurrence actually ran on.
    """

    y: np.ndarray
    f: float


@dataclass(frozen=True)
class LewisWorkspace:
    """Scalar sequences of the rank-one factor formulas.

    ``zhat``, ``z`` and ``e`` hold the n values ``zhat_1..zhat_n`` (index 0
    is subscript 1); ``x1n`` is the top-right inverse entry
    ``1/(a[1,1] zhat_1 + a[2,1] zhat_2)``.
    """

    zhat: np.ndarray
    z: np.ndarray
    e: np.ndarray
    x1n: float


@dataclass(frozen=True)
class BlockSplit:
    """Cut positions where zero off-diagonal entries decouple the matrix.

    ``cut_points`` lists, ascending and 1-based, every k with
    ``a[k+1, k] == 0`` or ``a[k, k+1] == 0``; ``kinds`` gives the matching
    kind per cut: ``sub-zero``, ``super-zero`` or ``both-zero``.
    """

    cut_points: tuple
    kinds: tuple


def _lock(arr):
    arr.flags.writeable = False
    return arr


def _require_band(A, which, method):
    band = A.upper if which == "super" else A.lower
    if (band == 0.0).any():
        raise ZeroOffDiagonalError(
            f"{method} requires all {which}-diagonal entries non-zero; "
            f"a zero occurs at 1-based position {int(np.nonzero(band == 0.0)[0][0]) + 1}"
        )


def _miller_counted(A, end):
    n = A.n
    if end not in ("last", "first"):
        raise ValueError(f"end must be 'last' or 'first', got {end!r}")
    if end == "last":
        _require_band(A, "super", "the backward column recurrence (end='last')")
        dg, lo, up = A.padded_bands()
    else:
        _require_band(A, "sub", "the backward column recurrence (end='first')")
        reversed_A = make_tridiagonal(
            A.upper[::-1], A.diag[::-1], A.lower[::-1]
        )
        dg, lo, up = reversed_A.padded_bands()
    colp, y, f, ops = backends.active().miller_column(dg, lo, up)
    if not (np.isfinite(y).all() and np.isfinite(f) and np.isfinite(colp).all()):
        raise RecurrenceOverflowError(
            "the backward column recurrence overflowed (non-finite y, f or column)"
        )
    if end == "first":
        flipped = np.zeros(n + 1)
        flipped[1:] = colp[1:][::-1]
        colp = flipped
    return colp, y, f, int(ops)


def miller_column(A: TridiagonalMatrix, end: str = "last") -> np.ndarray:
    """Last (or first) column of ``inv(A)`` by the backward recurrence.

    ``end='last'`` runs ``y_0 = 0, y_1 = 1,
    y_{k+1} = -(a[k,k-1] y_{k-1} + a[k,k] y_k) / a[k,k+1]`` and returns
    ``f * y[1:]`` with ``f = 1/(a[n,n-1] y_{n-1} + a[n,n] y_n)``.
    ``end='first'`` runs the same scheme on the index-reversed matrix and
    reverses the result.

    Raises
    ------
    ZeroOffDiagonalError
        A super-diagonal (resp. sub-diagonal for ``end='first'``) entry is 0.
    RecurrenceOverflowError
        Any ``y_k``, ``f`` or column entry is non-finite.
    """
    colp, _, _, _ = _miller_counted(A, end)
    return colp[1:] + 0.0


def miller_workspace(A: TridiagonalMatrix, end: str = "last") -> MillerWorkspace:
    """The ``y`` sequence and normalizer behind :func:`miller_column`."""
    _, y, f, _ = _miller_counted(A, end)
    return MillerWorkspace(y=_lock(y), f=float(f))


def invert_naive(A: TridiagonalMatrix) -> DenseMatrix:
    """Whole-inverse backward recursion seeded with the last column.

    Column n comes from :func:`miller_column`; every earlier column follows
    from ``X_{k-1} = (I_k - a[k,k] X_k - a[k+1,k] X_{k+1}) / a[k-1,k]``.
    Backward recursion is only stable towards the diagonal, so the strictly
    lower triangle of the result is inaccurate whenever the row recurrences
    admit a decaying solution; the method is kept as the instability
    baseline.

    Raises
    ------
    ZeroOffDiagonalError
        A super-diagonal entry is 0.
    RecurrenceOverflowError
        The seed column or the recursion produced a non-finite value.
    """
    X, _ = invert_naive_counted(A)
    return X


def invert_naive_counted(A: TridiagonalMatrix):
    """Like :func:`invert_naive`, also returning the multiply/divide count."""
    _require_band(A, "super", "the naive backward recursion")
    colp, _, _, ops = _miller_counted(A, "last")
    dg, lo, up = A.padded_bands()
    Xp, fill_ops = backends.active().naive_fill(dg, lo, up, colp)
    X = _unpad_entries(Xp, A.n)
    del Xp
    if not np.isfinite(X).all():
        raise RecurrenceOverflowError("the backward recursion overflowed")
    return DenseMatrix(X), ops + int(fill_ops)


def invert_two_way(A: TridiagonalMatrix, fast: bool = False) -> DenseMatrix:
    """Two-way recursion: both triangles recursed towards the diagonal.

    Columns 1 and n come from :func:`miller_column`.  With ``fast=False``
    the upper triangle (diagonal included) follows the backward three-term
    column recursion and the strictly lower triangle the forward one.  With
    ``fast=True`` each triangle instead scales its boundary column by one
    scalar sequence (``zhat`` backward, ``z`` forward), saving a factor ~2
    of multiplications.

    Raises
    ------
    ZeroOffDiagonalError
        Any off-diagonal entry is 0.
    RecurrenceOverflowError
        A boundary column, scalar sequence or recursion value is non-finite.
    """
    X, _ = invert_two_way_counted(A, fast)
    return X


def invert_two_way_counted(A: TridiagonalMatrix, fast: bool = False):
    """Like :func:`invert_two_way`, also returning the operation count."""
    _require_band(A, "super", "the two-way recursion")
    _require_band(A, "sub", "the two-way recursion")
    coln, _, _, ops_n = _miller_counted(A, "last")
    col1, _, _, ops_1 = _miller_counted(A, "first")
    ops = ops_n + ops_1
    dg, lo, up = A.padded_bands()
    if fast:
        Xp, zhat, z, fill_ops = backends.active().two_way_fast_fill(dg, lo, up, col1, coln)
        if not (np.isfinite(zhat).all() and np.isfinite(z).all()):
            raise RecurrenceOverflowError("the scalar scale sequences overflowed")
    else:
        Xp, fill_ops = backends.active().two_way_fill(dg, lo, up, col1, coln)
    X = _unpad_entries(Xp, A.n)
    del Xp
    if not np.isfinite(X).all():
        raise RecurrenceOverflowError("the triangle recursions overflowed")
    return DenseMatrix(X), ops + int(fill_ops)


def two_way_diagonal_gap(A: TridiagonalMatrix, fast: bool = False) -> float:
    """Diagnostic: how far the two-way diagonal is from the lower recursion.

    The two-way scheme takes each diagonal entry from the upper-triangle
    recursion; the lower recursion, run one row further, would produce its
    own value.  Returns ``max_k |x[k,k] - lower-recursion value|`` over the
    columns both recursions reach (0.0 for n < 3).
    """
    X = invert_two_way(A, fast=fast)
    E = X.entries
    n = A.n
    gap = 0.0
    lower, diag, upper = A.lower, A.diag, A.upper
    for j in range(2, n):  # 1-based column j = k+1, diagonal entry x[j,j]
        k = j - 1
        if k == 1:
            alt = -(diag[0] / lower[0]) * E[j - 1, 0]
        else:
            alt = (
                -(diag[k - 1] / lower[k - 1]) * E[j - 1, k - 1]
                - (upper[k - 2] / lower[k - 1]) * E[j - 1, k - 2]
            )
        gap = max(gap, abs(float(E[j - 1, j - 1]) - float(alt)))
    return gap


def _lewis_classify(zhat, z, e, x1n, corner_zero_is_singular):
    if not (np.isfinite(zhat).all() and np.isfinite(z).all() and np.isfinite(e).all()):
        raise RecurrenceOverflowError("a scalar workspace sequence overflowed")
    if np.isinf(x1n):
        if corner_zero_is_singular:
            raise SingularMatrixError(
                "singular block: the corner-element denominator is zero"
            )
        raise RecurrenceOverflowError("the corner element is non-finite")
    if x1n == 0.0:
        raise RecurrenceOverflowError("the corner element evaluated to zero")


def _lewis_counted_core(A, corner_zero_is_singular):
    if A.n < 2:
        raise NotApplicableError("the rank-one factor formulas need order at least 2")
    _require_band(A, "super", "the rank-one factor formulas")
    _require_band(A, "sub", "the rank-one factor formulas")
    dg, lo, up = A.padded_bands()
    Xp, zhat, z, e, x1n, ops = backends.active().lewis_fill(dg, lo, up)
    _lewis_classify(zhat, z, e, x1n, corner_zero_is_singular)
    X = _unpad_entries(Xp, A.n)
    del Xp
    if not np.isfinite(X).all():
        raise RecurrenceOverflowError("the row/column factors overflowed")
    return X, zhat, z, e, float(x1n), int(ops)


def lewis_workspace(A: TridiagonalMatrix) -> LewisWorkspace:
    """The scalar sequences behind :func:`invert_lewis`."""
    _, zhat, z, e, x1n, _ = _lewis_counted_core(A, corner_zero_is_singular=False)
    return LewisWorkspace(
        zhat=_lock(zhat[1:] + 0.0), z=_lock(z[1:] + 0.0), e=_lock(e[1:] + 0.0), x1n=x1n
    )


def invert_lewis(A: TridiagonalMatrix) -> DenseMatrix:
    """Rank-one factor inversion in n^2 + O(n) multiplications.

    Computes backward/forward scalar sequences ``zhat``/``z``, the
    off-diagonal scaling products ``e`` and the corner element ``x1n``, then
    fills ``x[s,k] = (e_s z_s x1n) zhat_k`` for s <= k and
    ``x[s,k] = (e_s zhat_s x1n) z_k`` for s > k.

    Raises
    ------
    NotApplicableError
        n < 2 (the corner-element formulas need two rows).
    ZeroOffDiagonalError
        Any off-diagonal entry is 0 (use :func:`invert_lewis_block`).
    RecurrenceOverflowError
        A workspace value is non-finite, or the corner element evaluates to
        exactly 0 or to infinity.
    """
    X, _ = invert_lewis_counted(A)
    return X


def invert_lewis_counted(A: TridiagonalMatrix):
    """Like :func:`invert_lewis`, also returning the operation count."""
    X, _, _, _, _, ops = _lewis_counted_core(A, corner_zero_is_singular=False)
    return DenseMatrix(X), ops


def find_block_split(A: TridiagonalMatrix) -> BlockSplit:
    """Locate every zero off-diagonal entry as a cut position."""
    cuts = []
    kinds = []
    for k in range(1, A.n):  # 1-based cut between rows k and k+1
        sub_zero = A.lower[k - 1] == 0.0
        super_zero = A.upper[k - 1] == 0.0
        if sub_zero and super_zero:
            cuts.append(k)
            kinds.append("both-zero")
        elif sub_zero:
            cuts.append(k)
            kinds.append("sub-zero")
        elif super_zero:
            cuts.append(k)
            kinds.append("super-zero")
    return BlockSplit(cut_points=tuple(cuts), kinds=tuple(kinds))


def _segment_inverse(A, start, end):
    """Inverse of the 1-based inclusive principal segment [start, end]."""
    m = end - start + 1
    if m == 1:
        d = float(A.diag[start - 1])
        if d == 0.0:
            raise SingularMatrixError(
                f"singular block: zero diagonal in the 1x1 block at position {start}"
            )
        return np.array([[1.0 / d]]), 1
    segment = make_tridiagonal(
        A.lower[start - 1 : end - 1],
        A.diag[start - 1 : end],
        A.upper[start - 1 : end - 1],
    )
    X, _, _, _, _, ops = _lewis_counted_core(segment, corner_zero_is_singular=True)
    return X, ops


def invert_lewis_block(A: TridiagonalMatrix) -> DenseMatrix:
    """Rank-one factor inversion with splitting at zero off-diagonals.

    The matrix is cut at every zero off-diagonal entry.  Cut-free segments
    invert via the rank-one formulas (1x1 segments directly); the inverse is
    then assembled right to left: a both-zero cut just stacks independent
    blocks, a sub-zero cut adds the upper-right rank-one correction
    ``-a[k,k+1] * (last column of F_inv) (first row of G_inv)`` with an
    exactly zero lower-left block, and a super-zero cut the transposed
    analogue.

    Raises
    ------
    SingularMatrixError
        A 1x1 segment has zero diagonal, or a segment's corner-element
        denominator is zero.
    RecurrenceOverflowError
        Overflow inside a segment or in a correction product.
    """
    X, _ = invert_lewis_block_counted(A)
    return X


def invert_lewis_block_counted(A: TridiagonalMatrix):
    """Like :func:`invert_lewis_block`, also returning the operation count."""
    n = A.n
    split = find_block_split(A)
    starts = [1] + [k + 1 for k in split.cut_points]
    ends = list(split.cut_points) + [n]
    M = None
    ops = 0
    for i in range(len(starts) - 1, -1, -1):
        F, seg_ops = _segment_inverse(A, starts[i], ends[i])
        ops += seg_ops
        if M is None:
            M = F
            continue
        kind = split.kinds[i]
        k = ends[i]  # the cut this assembly step bridges
        nf = F.shape[0]
        ng = M.shape[0]
        out = np.zeros((nf + ng, nf + ng))
        out[:nf, :nf] = F
        out[nf:, nf:] = M
        if kind == "sub-zero":
            w = (-A.upper[k - 1]) * F[:, -1]
            out[:nf, nf:] = w[:, None] * M[0, :][None, :]
            ops += nf + nf * ng
        elif kind == "super-zero":
            w = (-A.lower[k - 1]) * M[:, 0]
            out[nf:, :nf] = w[:, None] * F[-1, :][None, :]
            ops += ng + nf * ng
        M = out
    if not np.isfinite(M).all():
        raise RecurrenceOverflowError("a block correction product overflowed")
    return DenseMatrix(M), ops
