"""Tridiagonal and dense matrix types, banded products, norms, residual reports.

Index conventions: the public documentation is 1-based (``a[k, k+1]`` is the
super-diagonal entry in row k); storage is 0-based numpy arrays.  ``lower[i]``
holds ``A[i+1, i]``, ``diag[i]`` holds ``A[i, i]`` and ``upper[i]`` holds
``A[i, i+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

EPS = float(np.finfo(np.float64).eps)

NORM_KINDS = ("one", "inf", "frobenius")
RESIDUAL_NORM_KINDS = NORM_KINDS + ("two_estimate",)

__all__ = [
    "EPS",
    "NORM_KINDS",
    "RESIDUAL_NORM_KINDS",
    "TridiagonalMatrix",
    "DenseMatrix",
    "ResidualReport",
    "make_tridiagonal",
    "multiply",
    "norm",
    "residual_report",
    "condition_number",
]


def _as_locked_float_array(values, name, expected_len=None):
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if expected_len is not None and arr.shape[0] != expected_len:
        raise ValueError(
            f"{name} must have length {expected_len}, got {arr.shape[0]}"
        )
    if arr.size and not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite entries")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class TridiagonalMatrix:
    """A real n-by-n tridiagonal matrix stored as its three bands.

    Attributes
    ----------
    lower : numpy.ndarray, shape (n-1,)
        Sub-diagonal entries, ``lower[i] = A[i+1, i]``.
    diag : numpy.ndarray, shape (n,)
        Diagonal entries.
    upper : numpy.ndarray, shape (n-1,)
        Super-diagonal entries, ``upper[i] = A[i, i+1]``.
    """

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        diag = _as_locked_float_array(self.diag, "diag")
        n = diag.shape[0]
        if n < 1:
            raise ValueError("matrix order must be at least 1")
        lower = _as_locked_float_array(self.lower, "lower", n - 1)
        upper = _as_locked_float_array(self.upper, "upper", n - 1)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def n(self) -> int:
        return self.diag.shape[0]

    def to_dense(self) -> np.ndarray:
        """Return the full (n, n) array."""
        n = self.n
        dense = np.zeros((n, n))
        np.fill_diagonal(dense, self.diag)
        if n > 1:
            dense[np.arange(1, n), np.arange(n - 1)] = self.lower
            dense[np.arange(n - 1), np.arange(1, n)] = self.upper
        return dense

    def padded_bands(self):
        """Bands padded for 1-based kernel indexing.

        Returns arrays ``dg, lo, up`` of length n+1 with ``dg[k] = A[k, k]``,
        ``lo[k] = A[k+1, k]`` and ``up[k] = A[k, k+1]`` for 1-based k; slots
        outside each band's range (including index 0) are zero, matching the
        convention that out-of-range matrix entries are zero.
        """
        n = self.n
        dg = np.zeros(n + 1)
        lo = np.zeros(n + 1)
        up = np.zeros(n + 1)
        dg[1:] = self.diag
        lo[1:n] = self.lower
        up[1:n] = self.upper
        return dg, lo, up


@dataclass(frozen=True)
class DenseMatrix:
    """A dense square matrix of finite doubles (typically a computed inverse)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"entries must be square, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("matrix order must be at least 1")
        if not np.isfinite(arr).all():
            raise ValueError("entries contain non-finite values")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass
class ResidualReport:
    """Residual norms and conditioning for a candidate inverse X of A.

    ``right_residual`` maps each norm kind in ``RESIDUAL_NORM_KINDS`` to the
    corresponding norm of AX - I, ``left_residual`` to the norm of XA - I.
    ``cond_1`` is exact (via the dense oracle inverse); ``cond_2_estimate``
    uses the randomized 2-norm estimator.  Both are ``inf`` when the oracle
    declares A singular.
    """

    method: str
    n: int
    right_residual: dict = field(default_factory=dict)
    left_residual: dict = field(default_factory=dict)
    cond_1: float = np.inf
    cond_2_estimate: float = np.inf
    elementwise_max_right: float = np.nan
    elementwise_max_left: float = np.nan
    status: str = "success"


def make_tridiagonal(lower, diag, upper) -> TridiagonalMatrix:
    """Build a :class:`TridiagonalMatrix` from its three bands.

    Parameters
    ----------
    lower : array_like, shape (n-1,)
        Sub-diagonal entries ``A[k+1, k]``.
    diag : array_like, shape (n,)
        Diagonal entries.
    upper : array_like, shape (n-1,)
        Super-diagonal entries ``A[k, k+1]``.

    Raises
    ------
    ValueError
        On shape mismatch or non-finite entries.
    """
    return TridiagonalMatrix(lower=lower, diag=diag, upper=upper)


def _entries_of(M) -> np.ndarray:
    if isinstance(M, DenseMatrix):
        return M.entries
    if isinstance(M, TridiagonalMatrix):
        return M.to_dense()
    return np.asarray(M, dtype=np.float64)


def _unpad_entries(Xp: np.ndarray, n: int) -> np.ndarray:
    # Adding 0.0 copies the interior view and turns -0.0 (a harmless artifact
    # of divisions by signed infinities) into plain 0.0.
    return Xp[1 : n + 1, 1 : n + 1] + 0.0


def multiply(A: TridiagonalMatrix, X: DenseMatrix, side: str = "right") -> DenseMatrix:
    """Banded product: AX for ``side='right'``, XA for ``side='left'``.

    Each result entry touches at most three terms, so this is O(n^2) and
    agrees with the dense product to a couple of ulps per entry.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    E = _entries_of(X)
    n = A.n
    if E.shape != (n, n):
        raise ValueError(f"dimension mismatch: A is {n}x{n}, X is {E.shape}")
    lower, diag, upper = A.lower, A.diag, A.upper
    if side == "right":
        # (AX)[i, :] = lower[i-1] X[i-1, :] + diag[i] X[i, :] + upper[i] X[i+1, :]
        out = diag[:, None] * E
        if n > 1:
            out[1:, :] += lower[:, None] * E[:-1, :]
            out[:-1, :] += upper[:, None] * E[1:, :]
    else:
        # (XA)[:, j] = upper[j-1] X[:, j-1] + diag[j] X[:, j] + lower[j] X[:, j+1]
        out = E * diag[None, :]
        if n > 1:
            out[:, 1:] += E[:, :-1] * upper[None, :]
            out[:, :-1] += E[:, 1:] * lower[None, :]
    return DenseMatrix(out)


def norm(M, kind: str = "one") -> float:
    """Matrix norm of a dense matrix: ``one``, ``inf`` or ``frobenius``."""
    E = _entries_of(M)
    if kind == "one":
        return float(np.abs(E).sum(axis=0).max())
    if kind == "inf":
        return float(np.abs(E).sum(axis=1).max())
    if kind == "frobenius":
        return float(np.sqrt((E * E).sum()))
    raise ValueError(f"unknown norm kind {kind!r}")


def _residual_matrices(A: TridiagonalMatrix, X: DenseMatrix):
    n = A.n
    eye = np.eye(n)
    right = multiply(A, X, side="right").entries - eye
    left = multiply(A, X, side="left").entries - eye
    return right, left


def _norm_map(R: np.ndarray) -> dict:
    from .oracle import two_norm_estimate

    return {
        "one": norm(R, "one"),
        "inf": norm(R, "inf"),
        "frobenius": norm(R, "frobenius"),
        "two_estimate": two_norm_estimate(R),
    }


def residual_report(A: TridiagonalMatrix, X: DenseMatrix, method: str = "") -> ResidualReport:
    """Residual norms of AX - I and XA - I plus conditioning of A.

    The 2-norm entries use the same randomized estimator as
    :func:`trinv.oracle.two_norm_estimate`.  When the oracle declares A
    singular the condition fields are set to ``inf`` and the residuals are
    still reported.
    """
    from .errors import SingularMatrixError

    right, left = _residual_matrices(A, X)
    report = ResidualReport(method=method, n=A.n)
    report.right_residual = _norm_map(right)
    report.left_residual = _norm_map(left)
    report.elementwise_max_right = float(np.abs(right).max())
    report.elementwise_max_left = float(np.abs(left).max())
    try:
        report.cond_1 = condition_number(A, "one")
        report.cond_2_estimate = condition_number(A, "two_estimate")
    except SingularMatrixError:
        report.cond_1 = np.inf
        report.cond_2_estimate = np.inf
    return report


def condition_number(A: TridiagonalMatrix, kind: str = "one") -> float:
    """Condition number of A: exact in the 1-norm, estimated in the 2-norm.

    ``kind='one'`` returns ``norm(A, 1) * norm(inv(A), 1)`` with the inverse
    taken from the dense pivoted oracle.  ``kind='two_estimate'`` multiplies
    the randomized 2-norm estimates of A and of the oracle inverse; the result
    is clamped to >= 1 (the true condition number always is) and never exceeds
    the true value since both factors are lower bounds.

    Raises
    ------
    SingularMatrixError
        If the oracle factorization hits an exactly zero pivot.
    """
    from .oracle import dense_invert_gepp, two_norm_estimate

    inv = dense_invert_gepp(A)
    if kind == "one":
        return norm(A.to_dense(), "one") * norm(inv, "one")
    if kind == "two_estimate":
        est = two_norm_estimate(A.to_dense()) * two_norm_estimate(inv)
        return max(est, 1.0)
    raise ValueError(f"unknown condition kind {kind!r}")
