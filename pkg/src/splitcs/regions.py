"""Sample splitting and the membership tests that define the confidence sets.

Three set constructions share one statistic: the empirical mean and variance
of the per-observation loss differences m_theta - m_theta_hat1 over the
inference fold.  The ``eb`` test compares the mean against a finite-sample
concentration threshold and needs a uniform bound on loss differences, the
``clt`` test uses a studentized normal-quantile threshold, and ``naive``
compares against zero.  All comparisons are inclusive so the initial
estimate itself is always a member.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigurationError, InsufficientDataError
from .models import LossModel
from .special import std_normal_quantile

__all__ = [
    "Method",
    "RegionSpec",
    "SplitSample",
    "DiffStats",
    "split",
    "diff_stats",
    "diff_stats_batch",
    "eb_threshold",
    "eb_member",
    "clt_member",
    "clt_member_batch",
    "naive_member",
    "ConfidenceRegion",
    "region",
]


class Method(Enum):
    EMPIRICAL_BERNSTEIN = "eb"
    CLT = "clt"
    NAIVE = "naive"


@dataclass(frozen=True)
class RegionSpec:
    """Which membership test to run, at what miscoverage level."""

    method: Method
    alpha: float
    use_upper: bool = False

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError(f"alpha must lie in (0,1), got {self.alpha}")


@dataclass(frozen=True)
class SplitSample:
    """Estimation fold d1 and inference fold d2."""

    d1: object
    d2: object

    @property
    def n(self) -> int:
        return _fold_size(self.d2)


def _fold_size(fold) -> int:
    if isinstance(fold, tuple):  # (y, X) layout
        return len(fold[0])
    return len(fold)


def split(data, ratio: float = 0.5) -> SplitSample:
    """Deterministic prefix/suffix split; the first floor(ratio*N) items form
    the estimation fold.  No shuffling — randomize upstream if needed."""
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must lie in (0,1), got {ratio}")
    if isinstance(data, tuple):
        y, x = data
        n_total = len(y)
        cut = int(math.floor(ratio * n_total))
        d1, d2 = (y[:cut], x[:cut]), (y[cut:], x[cut:])
    else:
        n_total = len(data)
        cut = int(math.floor(ratio * n_total))
        d1, d2 = data[:cut], data[cut:]
    if n_total < 4 or cut < 2 or n_total - cut < 2:
        raise InsufficientDataError(
            f"split of {n_total} at ratio {ratio} leaves a fold with < 2 items"
        )
    return SplitSample(d1=d1, d2=d2)


@dataclass(frozen=True)
class DiffStats:
    """Mean and (n-1)-denominator variance of the loss differences."""

    mean: float
    variance: float
    n: int


def diff_stats(model: LossModel, theta, theta_hat1, d2) -> DiffStats:
    diffs = model.loss_diffs(theta, theta_hat1, d2)
    n = diffs.shape[0]
    if n < 2:
        raise InsufficientDataError(f"need at least 2 observations, got {n}")
    mean = float(diffs.mean())
    centered = diffs - mean
    var = float(centered @ centered) / (n - 1)
    return DiffStats(mean=mean, variance=max(var, 0.0), n=n)


def diff_stats_batch(
    model: LossModel, thetas, theta_hat1, d2
) -> tuple[np.ndarray, np.ndarray, int]:
    """Means and variances of the loss diffs for a batch of parameters."""
    diffs = model.loss_diffs_batch(thetas, theta_hat1, d2)
    n = diffs.shape[1]
    if n < 2:
        raise InsufficientDataError(f"need at least 2 observations, got {n}")
    means = diffs.mean(axis=1)
    centered = diffs - means[:, None]
    variances = np.maximum((centered * centered).sum(axis=1) / (n - 1), 0.0)
    return means, variances, n


def eb_threshold(variance: float, n: int, alpha: float, b0: float) -> float:
    """Concentration threshold sqrt(2 v log(2/a) / n) + 7 b0 log(2/a) / (3(n-1))."""
    if variance < 0.0:
        raise ValueError(f"variance must be non-negative, got {variance}")
    if n < 2:
        raise InsufficientDataError(f"need n >= 2, got {n}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0,1), got {alpha}")
    if b0 < 0.0:
        raise ValueError(f"b0 must be non-negative, got {b0}")
    log_term = math.log(2.0 / alpha)
    return math.sqrt(2.0 * variance * log_term / n) + 7.0 * b0 * log_term / (
        3.0 * (n - 1)
    )


def _upper_term(model, theta, theta_hat1, use_upper: bool) -> float:
    if not use_upper:
        return 0.0
    return min(0.0, float(model.curvature_upper(theta, theta_hat1)))


def eb_member(
    model: LossModel, theta, theta_hat1, d2, alpha: float, use_upper: bool = True
) -> bool:
    """Membership under the finite-sample concentration test."""
    if model.uniform_bound is None:
        raise ConfigurationError(
            "the concentration-based test requires the model to carry a uniform "
            "bound on loss differences"
        )
    stats = diff_stats(model, theta, theta_hat1, d2)
    bound = eb_threshold(stats.variance, stats.n, alpha, model.uniform_bound)
    return stats.mean <= bound + _upper_term(model, theta, theta_hat1, use_upper)


def clt_member(
    model: LossModel, theta, theta_hat1, d2, alpha: float, use_upper: bool = True
) -> bool:
    """Membership under the studentized normal-quantile test."""
    stats = diff_stats(model, theta, theta_hat1, d2)
    z = std_normal_quantile(1.0 - alpha)
    bound = z * math.sqrt(stats.variance) / math.sqrt(stats.n)
    return stats.mean <= bound + _upper_term(model, theta, theta_hat1, use_upper)


def clt_member_batch(
    model: LossModel, thetas, theta_hat1, d2, alpha: float, use_upper: bool = True
) -> np.ndarray:
    """Vectorized ``clt_member`` over a batch of parameters."""
    means, variances, n = diff_stats_batch(model, thetas, theta_hat1, d2)
    z = std_normal_quantile(1.0 - alpha)
    bound = z * np.sqrt(variances) / math.sqrt(n)
    if use_upper:
        upper = np.array(
            [min(0.0, float(model.curvature_upper(t, theta_hat1))) for t in thetas]
        )
        bound = bound + upper
    return means <= bound


def naive_member(model: LossModel, theta, theta_hat1, d2) -> bool:
    """Plug-in comparison: empirical risk of theta no worse than theta_hat1."""
    diffs = model.loss_diffs(theta, theta_hat1, d2)
    if diffs.shape[0] < 1:
        raise InsufficientDataError("need at least 1 observation")
    return float(diffs.mean()) <= 0.0


@dataclass(frozen=True)
class ConfidenceRegion:
    """Implicit region: a membership predicate plus its defining pieces."""

    model: LossModel
    theta_hat1: object
    d2: object
    spec: RegionSpec

    @property
    def n(self) -> int:
        return _fold_size(self.d2)

    def contains(self, theta) -> bool:
        if self.spec.method is Method.EMPIRICAL_BERNSTEIN:
            return eb_member(
                self.model, theta, self.theta_hat1, self.d2, self.spec.alpha,
                self.spec.use_upper,
            )
        if self.spec.method is Method.CLT:
            return clt_member(
                self.model, theta, self.theta_hat1, self.d2, self.spec.alpha,
                self.spec.use_upper,
            )
        return naive_member(self.model, theta, self.theta_hat1, self.d2)


def region(model: LossModel, theta_hat1, d2, spec: RegionSpec) -> ConfidenceRegion:
    """Bundle a membership test with its data and initial estimate."""
    if spec.method is Method.EMPIRICAL_BERNSTEIN and model.uniform_bound is None:
        raise ConfigurationError(
            "spec requests the concentration-based test but the model has no "
            "uniform bound"
        )
    return ConfidenceRegion(model=model, theta_hat1=theta_hat1, d2=d2, spec=spec)
