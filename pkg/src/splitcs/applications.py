"""Initial estimators and closed-form specializations for the application
models: the mean model's closed-form membership test and containment radius,
least squares, the maximum-score direction search, sample quantiles, the
quantile-region scan, and the argmin index set.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InsufficientDataError
from .models import ArgminModel, QuantileModel, sign_plus
from .regions import clt_member, clt_member_batch
from .special import std_normal_quantile

__all__ = [
    "ssu_member_closed",
    "radius_bound",
    "ols_fit",
    "max_score_fit",
    "sample_quantile",
    "QuantileScan",
    "quantile_region_scan",
    "argmin_region",
]


def ssu_member_closed(theta, theta_hat1, xbar_n, cov, n: int, alpha: float) -> bool:
    """Closed-form membership for the mean model with the curvature shrinkage:
    (xbar - theta).(theta_hat1 - theta) <= z_a n^{-1/2} ||theta_hat1 - theta||_cov.

    Algebraically identical to the generic studentized test with the
    squared-distance upper bound; same inclusive comparison.
    """
    theta = np.asarray(theta, dtype=np.float64)
    theta_hat1 = np.asarray(theta_hat1, dtype=np.float64)
    xbar_n = np.asarray(xbar_n, dtype=np.float64)
    if not theta.shape == theta_hat1.shape == xbar_n.shape:
        raise ValueError("dimension mismatch between parameters and mean")
    if n < 2:
        raise InsufficientDataError(f"need n >= 2, got {n}")
    gap = theta_hat1 - theta
    lhs = float((xbar_n - theta) @ gap)
    z = std_normal_quantile(1.0 - alpha)
    rhs = z / math.sqrt(n) * math.sqrt(max(float(gap @ cov @ gap), 0.0))
    return lhs <= rhs


def radius_bound(theta_hat1, xbar_n, cov, n: int, alpha: float) -> float:
    """Radius h such that the shrunken mean-model region is contained in the
    ball of radius h around theta_hat1:
    h = n^{-1/2} z_a sqrt(lambda_max(cov)) + ||theta_hat1 - xbar_n||."""
    theta_hat1 = np.asarray(theta_hat1, dtype=np.float64)
    xbar_n = np.asarray(xbar_n, dtype=np.float64)
    eigenvalues, _ = linalg.sym_eigen(cov)
    z = std_normal_quantile(1.0 - alpha)
    return z / math.sqrt(n) * math.sqrt(max(float(eigenvalues[-1]), 0.0)) + float(
        np.linalg.norm(theta_hat1 - xbar_n)
    )


def ols_fit(d1) -> np.ndarray:
    """Least-squares fit on the estimation fold d1 = (y, X) via the normal
    equations, solved through the Cholesky factorization of the gram matrix."""
    y, x = d1
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or y.shape[0] != x.shape[0]:
        raise ValueError(f"incompatible shapes y {y.shape}, X {x.shape}")
    if x.shape[0] < x.shape[1]:
        raise InsufficientDataError(
            f"need at least d={x.shape[1]} observations, got {x.shape[0]}"
        )
    gram = x.T @ x
    rhs = x.T @ y
    return linalg.cholesky_solve(gram, rhs)


def _score(y, x, theta) -> float:
    return float(np.sum(y * sign_plus(x @ theta)))


def max_score_fit(d1, n_grid: int = 2048, n_restarts: int = 32, rng=None) -> np.ndarray:
    """Heuristic maximizer of sum_i y_i sign(theta . x_i) over unit vectors.

    For d=2 this scans ``n_grid`` angles and refines around the best one; for
    d>2 it refines ``n_restarts`` random unit directions (drawn from ``rng``)
    by coordinate perturbation.  The downstream set constructions stay valid
    regardless of how good this initial estimate is.
    """
    y, x = d1
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if y.shape[0] == 0:
        raise InsufficientDataError("estimation fold is empty")
    d = x.shape[1]
    if d < 2:
        raise ValueError(f"need dimension >= 2, got {d}")

    if d == 2:
        best_angle, best = _best_angle(y, x, np.linspace(0.0, 2.0 * math.pi, n_grid, endpoint=False))
        step = 2.0 * math.pi / n_grid
        local = np.linspace(best_angle - step, best_angle + step, 65)
        angle, score = _best_angle(y, x, local)
        if score < best:
            angle = best_angle
        theta = np.array([math.cos(angle), math.sin(angle)])
        return theta / np.linalg.norm(theta)

    if rng is None:
        raise ValueError("random restarts need an RngStream for d > 2")
    gen = rng.generator()
    best_theta = None
    best = -math.inf
    for _ in range(n_restarts):
        v = gen.standard_normal(d)
        v /= np.linalg.norm(v)
        v, s = _refine_direction(y, x, v)
        if s > best:
            best, best_theta = s, v
    return best_theta


def _best_angle(y, x, angles):
    directions = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    scores = (y[None, :] * sign_plus(directions @ x.T)).sum(axis=1)
    k = int(np.argmax(scores))
    return float(angles[k]), float(scores[k])


def _refine_direction(y, x, v, passes: int = 3):
    d = v.shape[0]
    best = _score(y, x, v)
    for delta in (0.5, 0.25, 0.1):
        for _ in range(passes):
            improved = False
            for j in range(d):
                for sign in (1.0, -1.0):
                    cand = v.copy()
                    cand[j] += sign * delta
                    cand /= np.linalg.norm(cand)
                    s = _score(y, x, cand)
                    if s > best:
                        best, v, improved = s, cand, True
            if not improved:
                break
    return v, best


def sample_quantile(d1, gamma: float) -> float:
    """Type-1 sample quantile: the order statistic of rank ceil(gamma * m)."""
    x = np.sort(np.asarray(d1, dtype=np.float64))
    m = x.shape[0]
    if m < 1:
        raise InsufficientDataError("empty sample")
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"gamma must lie in (0,1), got {gamma}")
    rank = int(math.ceil(gamma * m))
    return float(x[max(rank, 1) - 1])


@dataclass(frozen=True)
class QuantileScan:
    """Grid scan of the studentized quantile region."""

    grid: np.ndarray
    member: np.ndarray
    theta_hat1: float
    lo: float
    hi: float
    width: float
    has_interior_gaps: bool


def quantile_region_scan(
    d1, d2, gamma: float, alpha: float, resolution: int = 4001, pad: float = 1.0
) -> QuantileScan:
    """Scan the studentized quantile region on a uniform grid.

    The grid spans the pooled data range padded by ``pad`` times that range
    on each side.  The reported interval is the hull of member points; the
    region is not guaranteed convex, so interior non-members are flagged.
    """
    d1 = np.asarray(d1, dtype=np.float64)
    d2 = np.asarray(d2, dtype=np.float64)
    pooled = np.concatenate([d1, d2])
    lo0, hi0 = float(pooled.min()), float(pooled.max())
    span = hi0 - lo0
    grid = np.linspace(lo0 - pad * span, hi0 + pad * span, resolution)

    theta_hat1 = sample_quantile(d1, gamma)
    model = QuantileModel(gamma)
    member = np.zeros(resolution, dtype=bool)
    chunk = 1024
    for start in range(0, resolution, chunk):
        block = grid[start : start + chunk]
        member[start : start + block.shape[0]] = clt_member_batch(
            model, block, theta_hat1, d2, alpha, use_upper=False
        )
    idx = np.flatnonzero(member)
    if idx.size == 0:
        # cannot happen when theta_hat1 falls inside the grid (it is always a
        # member); kept defensive for pathological pads
        return QuantileScan(grid, member, theta_hat1, math.nan, math.nan, 0.0, False)
    lo, hi = float(grid[idx[0]]), float(grid[idx[-1]])
    gaps = bool(np.any(~member[idx[0] : idx[-1] + 1]))
    return QuantileScan(grid, member, theta_hat1, lo, hi, hi - lo, gaps)


def argmin_region(d1, d2, alpha: float) -> list[int]:
    """Indices (1-based) whose coordinate mean is statistically compatible
    with the smallest one; always contains the estimation fold's argmin."""
    d1 = np.asarray(d1, dtype=np.float64)
    d2 = np.asarray(d2, dtype=np.float64)
    if d1.ndim != 2 or d2.ndim != 2 or d1.shape[1] != d2.shape[1]:
        raise ValueError("folds must be (n, d) matrices of common dimension")
    d = d1.shape[1]
    if d < 1:
        raise ValueError("need at least one coordinate")
    theta_hat1 = int(np.argmin(d1.mean(axis=0))) + 1  # ties -> smallest index
    model = ArgminModel(d)
    return [
        j for j in range(1, d + 1) if clt_member(model, j, theta_hat1, d2, alpha)
    ]
