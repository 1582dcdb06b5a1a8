"""Core types, banded products, norms and residual reporting."""

import numpy as np
import pytest

import trinv
from trinv.core import EPS, NORM_KINDS, RESIDUAL_NORM_KINDS

from conftest import random_bands

QUARTERS = trinv.make_tridiagonal([1.0, 1.0], [2.0, 2.0, 2.0], [1.0, 1.0])
QUARTERS_INV = 0.25 * np.array([[3.0, -2.0, 1.0], [-2.0, 4.0, -2.0], [1.0, -2.0, 3.0]])


class TestMakeTridiagonal:
    def test_minimal_order(self):
        A = trinv.make_tridiagonal([], [5.0], [])
        assert A.n == 1
        assert A.to_dense() == np.array([[5.0]])

    def test_toeplitz_2016_instance(self):
        A = trinv.make_tridiagonal([1.0] * 5, [2016.0] * 6, [1.0] * 5)
        D = A.to_dense()
        assert D.shape == (6, 6)
        assert np.all(np.diag(D) == 2016.0)
        assert np.all(np.diag(D, 1) == 1.0)
        assert np.all(np.diag(D, -1) == 1.0)
        assert D[0, 2] == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            trinv.make_tridiagonal([1.0, 0.0], [1.0, 1.0, 1.0], [0.0])
        with pytest.raises(ValueError):
            trinv.make_tridiagonal([1.0, 0.0], [1.0, 1.0], [0.0, 1.0])

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            trinv.make_tridiagonal([np.inf], [1.0, 1.0], [0.0])
        with pytest.raises(ValueError):
            trinv.make_tridiagonal([0.0], [np.nan, 1.0], [0.0])

    def test_empty_diag_rejected(self):
        with pytest.raises(ValueError):
            trinv.make_tridiagonal([], [], [])

    def test_bands_are_locked(self):
        A = trinv.make_tridiagonal([1.0], [2.0, 2.0], [3.0])
        with pytest.raises(ValueError):
            A.diag[0] = 9.0

    def test_padded_bands_layout(self):
        A = trinv.make_tridiagonal([4.0, 5.0], [1.0, 2.0, 3.0], [6.0, 7.0])
        dg, lo, up = A.padded_bands()
        assert list(dg) == [0.0, 1.0, 2.0, 3.0]
        assert list(lo) == [0.0, 4.0, 5.0, 0.0]
        assert list(up) == [0.0, 6.0, 7.0, 0.0]


class TestDenseMatrix:
    def test_validation(self):
        with pytest.raises(ValueError):
            trinv.DenseMatrix(np.zeros((2, 3)))
        with pytest.raises(ValueError):
            trinv.DenseMatrix(np.array([[np.nan]]))

    def test_entries_read_only(self):
        X = trinv.DenseMatrix(np.eye(2))
        with pytest.raises(ValueError):
            X.entries[0, 0] = 7.0


class TestMultiply:
    def test_identity(self):
        I3 = trinv.make_tridiagonal([0.0, 0.0], [1.0, 1.0, 1.0], [0.0, 0.0])
        X = trinv.DenseMatrix(np.eye(3))
        assert np.array_equal(trinv.multiply(I3, X, "right").entries, np.eye(3))
        assert np.array_equal(trinv.multiply(I3, X, "left").entries, np.eye(3))

    def test_matches_dense_product(self, rng):
        for _ in range(25):
            n = int(rng.integers(1, 40))
            A = trinv.make_tridiagonal(*random_bands(rng, n))
            X = trinv.DenseMatrix(rng.uniform(-10, 10, (n, n)))
            D = A.to_dense()
            scale = np.abs(D).sum(axis=1).max() * np.abs(X.entries).max() + 1.0
            AX = trinv.multiply(A, X, "right").entries
            XA = trinv.multiply(A, X, "left").entries
            assert np.abs(AX - D @ X.entries).max() <= 4.0 * EPS * scale
            assert np.abs(XA - X.entries @ D).max() <= 4.0 * EPS * scale

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            trinv.multiply(QUARTERS, trinv.DenseMatrix(np.eye(2)), "right")

    def test_bad_side(self):
        with pytest.raises(ValueError):
            trinv.multiply(QUARTERS, trinv.DenseMatrix(np.eye(3)), "up")


class TestNorm:
    def test_against_numpy(self, rng):
        M = rng.uniform(-5, 5, (17, 17))
        assert trinv.norm(M, "one") == np.linalg.norm(M, 1)
        assert trinv.norm(M, "inf") == np.linalg.norm(M, np.inf)
        assert trinv.norm(M, "frobenius") == pytest.approx(np.linalg.norm(M, "fro"), rel=1e-15)

    def test_absolute_norms(self, rng):
        M = rng.uniform(-5, 5, (9, 9))
        for kind in NORM_KINDS:
            assert trinv.norm(np.abs(M), kind) == trinv.norm(M, kind)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            trinv.norm(np.eye(2), "two")


class TestResidualReport:
    def test_exact_inverse_of_integer_matrix(self):
        rep = trinv.residual_report(QUARTERS, trinv.DenseMatrix(QUARTERS_INV), method="exact")
        assert rep.method == "exact"
        assert rep.n == 3
        assert rep.status == "success"
        for kind in ("one", "inf", "frobenius"):
            assert rep.right_residual[kind] <= 4.0 * EPS * 3
            assert rep.left_residual[kind] <= 4.0 * EPS * 3
        assert set(rep.right_residual) == set(RESIDUAL_NORM_KINDS)
        assert rep.elementwise_max_right <= 4.0 * EPS
        assert rep.cond_1 == pytest.approx(4.0 * 2.0)
        assert 1.0 <= rep.cond_2_estimate <= rep.cond_1

    def test_singular_matrix_reports_inf_cond(self):
        A = trinv.make_tridiagonal([0.0], [1.0, 0.0], [0.0])
        rep = trinv.residual_report(A, trinv.DenseMatrix(np.eye(2)), method="x")
        assert rep.cond_1 == np.inf
        assert rep.cond_2_estimate == np.inf
        assert np.isfinite(rep.right_residual["one"])


class TestConditionNumber:
    def test_identity(self):
        I3 = trinv.make_tridiagonal([0.0, 0.0], [1.0, 1.0, 1.0], [0.0, 0.0])
        assert trinv.condition_number(I3, "one") == 1.0
        assert trinv.condition_number(I3, "two_estimate") == 1.0

    def test_quarters_one_norm(self):
        # ||A||_1 = 4, ||A^-1||_1 = 2 by columns of the exact inverse.
        assert trinv.condition_number(QUARTERS, "one") == pytest.approx(8.0)

    def test_estimate_below_exact_for_symmetric(self):
        # For symmetric A, cond_2 <= cond_1; the estimate lower-bounds cond_2.
        est = trinv.condition_number(QUARTERS, "two_estimate")
        assert 1.0 <= est <= trinv.condition_number(QUARTERS, "one") * (1 + 1e-12)

    def test_singular(self):
        A = trinv.make_tridiagonal([1.0], [1.0, 1.0], [1.0])
        with pytest.raises(trinv.SingularMatrixError):
            trinv.condition_number(A, "one")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            trinv.condition_number(QUARTERS, "two")
