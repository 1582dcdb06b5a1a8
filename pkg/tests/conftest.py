"""Shared fixtures: kernel warm-up and random matrix families."""

import numpy as np
import pytest

import trinv
from trinv.errors import SingularMatrixError


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile every jitted kernel once so timed tests see steady state."""
    A = trinv.toeplitz(7, 1.0, 1.0, 1.0)
    trinv.invert_ratio_extended(A)
    trinv.invert_ratio_basic(trinv.make_tridiagonal([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0]))
    trinv.invert_naive(A)
    trinv.invert_two_way(A, fast=False)
    trinv.invert_two_way(A, fast=True)
    trinv.invert_lewis(A)
    trinv.invert_lewis_block(trinv.t10())
    trinv.miller_column(A, end="first")


def random_bands(rng, n, magnitude=10.0, zero_probability=0.0):
    """Band triple with entries uniform in [-magnitude, magnitude]."""

    def band(m):
        v = rng.uniform(-magnitude, magnitude, m)
        if zero_probability > 0.0 and m > 0:
            v[rng.random(m) < zero_probability] = 0.0
        return v

    return band(n - 1), band(n), band(n - 1)


def random_nonsingular(rng, n, magnitude=10.0, zero_probability=0.0, cond_cap=None, tries=50):
    """A random tridiagonal matrix the oracle can invert, or None.

    When ``cond_cap`` is set, also rejects draws with cond_1 above the cap.
    Returns (A, oracle_inverse, cond_1) so callers need not refactorize.
    """
    for _ in range(tries):
        A = trinv.make_tridiagonal(*random_bands(rng, n, magnitude, zero_probability))
        try:
            Xo = trinv.dense_invert_gepp(A)
        except SingularMatrixError:
            continue
        cond = trinv.norm(A.to_dense(), "one") * trinv.norm(Xo, "one")
        if not np.isfinite(cond) or (cond_cap is not None and cond > cond_cap):
            continue
        return A, Xo, cond
    return None


@pytest.fixture
def rng():
    return np.random.default_rng(20160814)
