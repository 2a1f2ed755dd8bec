"""The comparison baseline: the classical ellipsoidal (Wald) confidence set
for a multivariate mean, with exact volume and semi-axis computations.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels, linalg
from .errors import InsufficientDataError
from .special import chi_square_quantile, log_gamma

__all__ = [
    "WaldRegion",
    "wald_region_from_data",
    "wald_member",
    "wald_semi_axes",
    "wald_volume",
    "wald_log_volume",
    "axis_ratio",
]


@dataclass(frozen=True)
class WaldRegion:
    """Ellipsoid {theta : (theta - center)' cov^{-1} (theta - center) <= chi2/N}.

    Construction fails on a singular covariance (e.g. d >= N); there is
    deliberately no pseudo-inverse fallback, since silently regularizing the
    baseline would corrupt any comparison against it.
    """

    center: np.ndarray
    cov: np.ndarray
    n_obs: int
    alpha: float
    chol: np.ndarray = field(init=False, repr=False, compare=False)
    threshold: float = field(init=False, compare=False)

    def __post_init__(self):
        center = np.asarray(self.center, dtype=np.float64)
        cov = np.asarray(self.cov, dtype=np.float64)
        if self.n_obs < 2:
            raise InsufficientDataError(f"need N >= 2, got {self.n_obs}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0,1), got {self.alpha}")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "chol", linalg.cholesky_factor(cov))
        d = center.shape[0]
        object.__setattr__(
            self,
            "threshold",
            chi_square_quantile(d, 1.0 - self.alpha) / self.n_obs,
        )

    @property
    def dimension(self) -> int:
        return self.center.shape[0]


def wald_region_from_data(data, alpha: float) -> WaldRegion:
    x = np.asarray(data, dtype=np.float64)
    mean, cov = linalg.sample_moments(x)
    return WaldRegion(center=mean, cov=cov, n_obs=x.shape[0], alpha=alpha)


def wald_member(region: WaldRegion, theta) -> bool:
    """Inclusive quadratic-form test, computed by factor solves."""
    theta = np.asarray(theta, dtype=np.float64)
    y = kernels.solve_lower(region.chol, theta - region.center)
    return float(y @ y) <= region.threshold


def wald_semi_axes(region: WaldRegion) -> np.ndarray:
    """Ellipsoid semi-axes sqrt(chi2/N * lambda_k), ascending."""
    eigenvalues, _ = linalg.sym_eigen(region.cov)
    return np.sqrt(region.threshold * np.maximum(eigenvalues, 0.0))


def wald_log_volume(region: WaldRegion) -> float:
    axes = wald_semi_axes(region)
    if np.any(axes <= 0.0):
        raise ValueError("degenerate ellipsoid: non-positive semi-axis")
    d = region.dimension
    return (
        0.5 * d * math.log(math.pi)
        - log_gamma(0.5 * d + 1.0)
        + float(np.sum(np.log(axes)))
    )


def wald_volume(region: WaldRegion) -> float:
    return math.exp(wald_log_volume(region))


def axis_ratio(h: float, semi_axes) -> float:
    """h over the geometric mean of the semi-axes, computed in log space."""
    axes = np.asarray(semi_axes, dtype=np.float64)
    if h <= 0.0 or np.any(axes <= 0.0):
        raise ValueError("radius and semi-axes must all be positive")
    return math.exp(math.log(h) - float(np.mean(np.log(axes))))
