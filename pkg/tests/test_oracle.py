"""The dense pivoted-elimination baseline and the 2-norm estimator."""

import numpy as np
import pytest

import trinv
from trinv.core import EPS
from trinv.oracle import gepp_factorize, two_norm_estimate

from conftest import random_nonsingular


def test_identity_inverts_to_identity():
    I4 = trinv.make_tridiagonal([0.0] * 3, [1.0] * 4, [0.0] * 3)
    assert np.array_equal(trinv.dense_invert_gepp(I4).entries, np.eye(4))


def test_quarters_matrix_hand_adjugate():
    # det = 4; adjugate computed by hand from the 2x2 cofactors.
    A = trinv.make_tridiagonal([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0])
    expected = 0.25 * np.array([[3.0, -2.0, 1.0], [-2.0, 4.0, -2.0], [1.0, -2.0, 3.0]])
    assert np.abs(trinv.dense_invert_gepp(A).entries - expected).max() <= 4 * EPS


def test_singular_raises():
    with pytest.raises(trinv.SingularMatrixError):
        trinv.dense_invert_gepp(trinv.make_tridiagonal([1.0], [1.0, 1.0], [1.0]))
    # eigenvalue 1 + 2cos(6*pi/9) = 0 exactly
    with pytest.raises(trinv.SingularMatrixError):
        trinv.dense_invert_gepp(trinv.toeplitz(8, 1.0, 1.0, 1.0))


def test_factorization_reconstructs_permuted_matrix():
    A = trinv.t10()
    fact = gepp_factorize(A)
    rebuilt = fact.permuted_reconstruction()
    permuted = A.to_dense()[fact.permutation_rows()]
    assert np.abs(rebuilt - permuted).max() <= 64 * EPS * np.abs(A.to_dense()).max()


def test_t10_residual_asymmetry():
    """Right residual tiny, left residual large: the one-sided guarantee."""
    A = trinv.t10()
    X = trinv.dense_invert_gepp(A)
    D = A.to_dense()
    right = np.linalg.norm(D @ X.entries - np.eye(10), 2)
    left = np.linalg.norm(X.entries @ D - np.eye(10), 2)
    assert 5e-11 <= right <= 5e-7
    assert 0.03 <= left <= 30.0


def test_right_residual_bound_on_random_family(rng):
    for _ in range(40):
        n = int(rng.integers(1, 60))
        drawn = random_nonsingular(rng, n, zero_probability=0.2)
        if drawn is None:
            continue
        A, Xo, cond = drawn
        R = A.to_dense() @ Xo.entries - np.eye(n)
        assert np.abs(R).sum(axis=0).max() <= EPS * 10 * n * cond


class TestTwoNormEstimate:
    def test_monotone_in_iterations(self, rng):
        M = rng.uniform(-3, 3, (12, 12))
        values = [two_norm_estimate(M, iterations=k, seed=3) for k in (0, 1, 5, 20, 60)]
        assert all(a <= b * (1 + 1e-12) for a, b in zip(values, values[1:]))

    def test_never_exceeds_true_norm(self, rng):
        for _ in range(20):
            M = rng.uniform(-3, 3, (9, 9))
            true = np.linalg.norm(M, 2)
            assert two_norm_estimate(M) <= true * (1 + 1e-10)

    def test_converges_on_symmetric(self):
        M = trinv.dense_invert_gepp(trinv.make_tridiagonal([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0]))
        assert two_norm_estimate(M) == pytest.approx(np.linalg.norm(M.entries, 2), rel=1e-9)

    def test_zero_matrix(self):
        assert two_norm_estimate(np.zeros((4, 4))) == 0.0

    def test_negative_iterations(self):
        with pytest.raises(ValueError):
            two_norm_estimate(np.eye(2), iterations=-1)
