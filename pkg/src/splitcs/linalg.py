"""Dense symmetric linear algebra on top of the backend kernels."""

import numpy as np

from . import kernels
from .errors import ConvergenceError, InsufficientDataError, NotPositiveDefiniteError

_SYM_RTOL = 1e-12
_JACOBI_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


def _as_sym_matrix(a) -> np.ndarray:
    a = np.ascontiguousarray(np.asarray(a, dtype=np.float64))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.abs(a).max()))
    if float(np.abs(a - a.T).max()) > _SYM_RTOL * scale:
        raise ValueError("matrix is not symmetric within 1e-12 relative tolerance")
    return a


def sym_eigen(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns eigenvalues in ascending order and the matching column-orthonormal
    eigenvector matrix.  Raises ConvergenceError after 100 sweeps (never seen
    in practice for the d <= 200 matrices this package works with).
    """
    a = _as_sym_matrix(a)
    work = 0.5 * (a + a.T)
    w, v, sweeps = kernels.jacobi_eigen(work, _JACOBI_TOL, _JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(
            f"Jacobi eigensolver did not converge in {_JACOBI_MAX_SWEEPS} sweeps"
        )
    order = np.argsort(w, kind="stable")
    return w[order], np.ascontiguousarray(v[:, order])


def cholesky_factor(a) -> np.ndarray:
    """Lower-triangular L with L L^T = a, for positive-definite ``a``."""
    a = _as_sym_matrix(a)
    lo, status = kernels.cholesky_factor(a)
    if status >= 0:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite (pivot {status} is non-positive)"
        )
    return lo


def cholesky_solve(a, b, factor: np.ndarray | None = None) -> np.ndarray:
    """Solve a x = b for symmetric positive-definite ``a``.

    Pass ``factor`` to reuse a cached Cholesky factor of ``a``.
    """
    lo = cholesky_factor(a) if factor is None else factor
    b = np.asarray(b, dtype=np.float64)
    if b.shape != (lo.shape[0],):
        raise ValueError(f"rhs shape {b.shape} does not match matrix {lo.shape}")
    y = kernels.solve_lower(lo, b)
    return kernels.solve_lower_transpose(lo, y)


def solve_lower_many(lo: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Forward-substitute L y = b for a batch of right-hand sides (d, m)."""
    d = lo.shape[0]
    y = np.empty_like(b)
    for i in range(d):
        y[i] = (b[i] - lo[i, :i] @ y[:i]) / lo[i, i]
    return y


def log_det_from_factor(lo: np.ndarray) -> float:
    return 2.0 * float(np.sum(np.log(np.diag(lo))))


def sample_moments(data) -> tuple[np.ndarray, np.ndarray]:
    """Sample mean and (N-1)-denominator covariance of rows of ``data``."""
    x = np.asarray(data, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2:
        raise ValueError(f"expected (N, d) data, got shape {x.shape}")
    n = x.shape[0]
    if n < 2:
        raise InsufficientDataError(f"need at least 2 observations, got {n}")
    mean = x.mean(axis=0)
    centered = x - mean
    cov = centered.T @ centered / (n - 1)
    return mean, cov
