import numpy as np
import pytest

from splitcs import _kernels_numba, _kernels_numpy, linalg
from splitcs.errors import InsufficientDataError, NotPositiveDefiniteError


def random_symmetric(rng, d, scale=1.0):
    a = rng.standard_normal((d, d)) * scale
    return a + a.T


def random_spd(rng, d):
    a = rng.standard_normal((d, d))
    return a @ a.T + d * np.eye(d)


class TestSymEigen:
    def test_identity(self):
        w, v = linalg.sym_eigen(np.eye(3))
        assert np.allclose(w, 1.0)
        assert np.allclose(v @ v.T, np.eye(3))

    def test_diagonal_sorting(self):
        w, _ = linalg.sym_eigen(np.diag([3.0, 1.0, 2.0]))
        assert np.allclose(w, [1.0, 2.0, 3.0])

    def test_reconstruction_residual(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = random_symmetric(rng, 5)
            w, v = linalg.sym_eigen(a)
            norm = np.linalg.norm(a)
            assert np.linalg.norm(a @ v - v * w) <= 1e-10 * norm
            assert np.abs(v.T @ v - np.eye(5)).max() <= 1e-10
            assert np.all(np.diff(w) >= 0.0)

    def test_trace_and_determinant_invariants(self):
        rng = np.random.default_rng(12)
        for _ in range(10):
            a = random_spd(rng, 7)
            w, _ = linalg.sym_eigen(a)
            tr = np.trace(a)
            assert abs(w.sum() - tr) <= 1e-10 * abs(tr)
            log_det = linalg.log_det_from_factor(linalg.cholesky_factor(a))
            assert np.sum(np.log(w)) == pytest.approx(log_det, rel=1e-8)

    def test_rejects_asymmetric(self):
        a = np.array([[1.0, 2.0], [0.0, 1.0]])
        with pytest.raises(ValueError, match="symmetric"):
            linalg.sym_eigen(a)

    def test_rejects_nonfinite(self):
        a = np.array([[1.0, np.nan], [np.nan, 1.0]])
        with pytest.raises(ValueError, match="finite"):
            linalg.sym_eigen(a)

    def test_large_matrix(self):
        rng = np.random.default_rng(13)
        a = random_spd(rng, 80)
        w, v = linalg.sym_eigen(a)
        assert np.linalg.norm(a @ v - v * w) <= 1e-10 * np.linalg.norm(a)


class TestCholesky:
    def test_identity_solve(self):
        b = np.array([1.0, -2.0, 3.0])
        assert np.allclose(linalg.cholesky_solve(np.eye(3), b), b)

    def test_scalar(self):
        assert linalg.cholesky_solve(np.array([[4.0]]), np.array([8.0])) == pytest.approx(
            [2.0]
        )

    def test_random_spd_residual(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            a = random_spd(rng, 6)
            b = rng.standard_normal(6)
            x = linalg.cholesky_solve(a, b)
            assert np.linalg.norm(a @ x - b) <= 1e-10 * np.linalg.norm(b)

    def test_solve_then_multiply_roundtrip(self):
        rng = np.random.default_rng(22)
        for _ in range(10):
            a = random_spd(rng, 9)
            x = rng.standard_normal(9)
            b = a @ x
            assert np.linalg.norm(linalg.cholesky_solve(a, b) - x) <= 1e-9 * (
                1.0 + np.linalg.norm(x)
            )

    def test_factor_recomposes(self):
        rng = np.random.default_rng(23)
        a = random_spd(rng, 5)
        lo = linalg.cholesky_factor(a)
        assert np.allclose(lo @ lo.T, a)
        assert np.allclose(np.triu(lo, 1), 0.0)

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefiniteError):
            linalg.cholesky_factor(np.array([[1.0, 2.0], [2.0, 1.0]]))
        # rank-deficient: singular covariance from d >= N
        x = np.random.default_rng(1).standard_normal((3, 5))
        _, cov = linalg.sample_moments(x)
        with pytest.raises(NotPositiveDefiniteError):
            linalg.cholesky_factor(cov)


class TestSampleMoments:
    def test_two_points(self):
        mean, cov = linalg.sample_moments(np.array([[0.0, 0.0], [2.0, 2.0]]))
        assert np.allclose(mean, [1.0, 1.0])
        assert np.allclose(cov, [[2.0, 2.0], [2.0, 2.0]])

    def test_constant_data(self):
        mean, cov = linalg.sample_moments(np.ones((5, 3)) * 4.2)
        assert np.allclose(mean, 4.2)
        assert np.allclose(cov, 0.0)

    def test_translation(self):
        rng = np.random.default_rng(31)
        x = rng.standard_normal((40, 3))
        shift = rng.standard_normal(3)
        m0, c0 = linalg.sample_moments(x)
        m1, c1 = linalg.sample_moments(x + shift)
        assert np.allclose(m1, m0 + shift)
        assert np.allclose(c1, c0)

    def test_insufficient_data(self):
        with pytest.raises(InsufficientDataError):
            linalg.sample_moments(np.ones((1, 2)))


class TestBackendParity:
    """The jitted and pure-numpy kernels implement identical update formulas."""

    def test_jacobi_agrees(self):
        rng = np.random.default_rng(41)
        for d in (2, 6, 23):
            a = random_symmetric(rng, d)
            w1, v1, s1 = _kernels_numba.jacobi_eigen(a.copy(), 1e-12, 100)
            w2, v2, s2 = _kernels_numpy.jacobi_eigen(a.copy(), 1e-12, 100)
            assert s1 >= 0 and s2 >= 0
            assert np.abs(np.sort(w1) - np.sort(w2)).max() <= 1e-12

    def test_cholesky_agrees(self):
        rng = np.random.default_rng(42)
        for d in (2, 6, 23):
            a = random_spd(rng, d)
            l1, st1 = _kernels_numba.cholesky_factor(a)
            l2, st2 = _kernels_numpy.cholesky_factor(a)
            assert st1 == st2 == -1
            assert np.abs(l1 - l2).max() <= 1e-12
            b = rng.standard_normal(d)
            y1 = _kernels_numba.solve_lower(l1, b)
            y2 = _kernels_numpy.solve_lower(l2, b)
            assert np.abs(y1 - y2).max() <= 1e-12
            x1 = _kernels_numba.solve_lower_transpose(l1, y1)
            x2 = _kernels_numpy.solve_lower_transpose(l2, y2)
            assert np.abs(x1 - x2).max() <= 1e-12
