"""Loss models: mean, misspecified linear regression, binary choice
(maximum-score), quantile, and discrete argmin.

A model packages a per-observation loss, an optional uniform bound on loss
differences (required by the concentration-based membership test), and an
optional upper bound on the excess risk of the initial estimate that the
set constructions may subtract.  Dataset layouts are model-specific:
row-matrix ``(n, d)`` for mean/argmin, ``(y, X)`` pairs for the regression
and binary-choice models, and a flat vector for the quantile model.
"""

import numpy as np

__all__ = [
    "LossModel",
    "MeanModel",
    "LinRegModel",
    "ManskiModel",
    "QuantileModel",
    "ArgminModel",
    "mean_loss",
    "linreg_loss",
    "manski_loss",
    "quantile_loss",
    "argmin_loss",
    "sign_plus",
]


def mean_loss(theta, x) -> float:
    """Squared Euclidean distance ||x - theta||^2."""
    theta = np.asarray(theta, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if theta.shape != x.shape:
        raise ValueError(f"dimension mismatch: {theta.shape} vs {x.shape}")
    diff = x - theta
    return float(diff @ diff)


def linreg_loss(theta, obs) -> float:
    """Squared prediction error (y - theta.x)^2 for obs = (y, x)."""
    y, x = obs
    theta = np.asarray(theta, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if theta.shape != x.shape:
        raise ValueError(f"dimension mismatch: {theta.shape} vs {x.shape}")
    r = float(y) - float(theta @ x)
    return r * r


def sign_plus(t):
    """Sign convention with sign(0) = +1."""
    return np.where(np.asarray(t) >= 0.0, 1.0, -1.0)


def manski_loss(theta, obs) -> float:
    """-y * sign(theta.x) for obs = (y, x), y in {-1, +1}; sign(0) = +1."""
    y, x = obs
    y = float(y)
    if y not in (-1.0, 1.0):
        raise ValueError(f"labels must be -1 or +1, got {y}")
    theta = np.asarray(theta, dtype=np.float64)
    if abs(float(theta @ theta) - 1.0) > 2e-8:
        raise ValueError("direction parameter must be a unit vector")
    x = np.asarray(x, dtype=np.float64)
    return -y * float(sign_plus(float(theta @ x)))


def quantile_loss(theta: float, x: float, gamma: float) -> float:
    """Pinball loss gamma*(x-theta)_+ + (1-gamma)*(theta-x)_+."""
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"gamma must lie in (0,1), got {gamma}")
    return gamma * max(x - theta, 0.0) + (1.0 - gamma) * max(theta - x, 0.0)


def argmin_loss(j: int, x) -> float:
    """Coordinate pick x_j for 1-based index j."""
    x = np.asarray(x, dtype=np.float64)
    if not 1 <= j <= x.shape[0]:
        raise ValueError(f"index {j} outside 1..{x.shape[0]}")
    return float(x[j - 1])


class LossModel:
    """Base interface consumed by the membership tests in ``regions``."""

    uniform_bound: float | None = None
    parameter_space: str = "euclidean"

    def loss(self, theta, z) -> float:
        raise NotImplementedError

    def curvature_upper(self, theta, theta_hat1) -> float:
        """Upper bound on minus the excess risk of ``theta_hat1``; must be
        <= 0 at the truth.  Zero disables the shrinkage."""
        return 0.0

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        """Vector of loss(theta, z_i) - loss(theta_hat1, z_i) over d2."""
        return np.array(
            [self.loss(theta, z) - self.loss(theta_hat1, z) for z in d2],
            dtype=np.float64,
        )

    def loss_diffs_batch(self, thetas, theta_hat1, d2) -> np.ndarray:
        """(m, n) matrix of loss diffs for m candidate parameters."""
        return np.stack([self.loss_diffs(t, theta_hat1, d2) for t in thetas])


class MeanModel(LossModel):
    """Squared-error loss whose population minimizer is the mean."""

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        self.dimension = dimension

    def loss(self, theta, z) -> float:
        return mean_loss(theta, z)

    def curvature_upper(self, theta, theta_hat1) -> float:
        diff = np.asarray(theta_hat1, dtype=np.float64) - np.asarray(
            theta, dtype=np.float64
        )
        return -float(diff @ diff)

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        x = np.asarray(d2, dtype=np.float64)
        d1 = x - np.asarray(theta, dtype=np.float64)
        d2_ = x - np.asarray(theta_hat1, dtype=np.float64)
        return (d1 * d1).sum(axis=1) - (d2_ * d2_).sum(axis=1)

    def loss_diffs_batch(self, thetas, theta_hat1, d2) -> np.ndarray:
        # direct differences (not the expanded quadratic) so diffs vanish
        # exactly when a batch entry equals theta_hat1
        x = np.asarray(d2, dtype=np.float64)
        thetas = np.asarray(thetas, dtype=np.float64)
        base = x - np.asarray(theta_hat1, dtype=np.float64)
        base_sq = (base * base).sum(axis=1)
        out = np.empty((thetas.shape[0], x.shape[0]))
        step = max(1, 2**19 // max(x.size, 1))  # bound the broadcast cube
        for start in range(0, thetas.shape[0], step):
            block = thetas[start : start + step]
            gap = x[None, :, :] - block[:, None, :]
            out[start : start + block.shape[0]] = (gap * gap).sum(axis=2) - base_sq
        return out


class LinRegModel(LossModel):
    """Squared-error regression loss; datasets are (y, X) pairs."""

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        self.dimension = dimension

    def loss(self, theta, z) -> float:
        return linreg_loss(theta, z)

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        y, x = d2
        y = np.asarray(y, dtype=np.float64)
        x = np.asarray(x, dtype=np.float64)
        r1 = y - x @ np.asarray(theta, dtype=np.float64)
        r2 = y - x @ np.asarray(theta_hat1, dtype=np.float64)
        return r1 * r1 - r2 * r2


class ManskiModel(LossModel):
    """Binary-choice score loss on the unit sphere; differences are bounded
    by 2, enabling the concentration-based set."""

    uniform_bound = 2.0
    parameter_space = "unit-sphere"

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        self.dimension = dimension

    def loss(self, theta, z) -> float:
        return manski_loss(theta, z)

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        y, x = d2
        y = np.asarray(y, dtype=np.float64)
        x = np.asarray(x, dtype=np.float64)
        s1 = sign_plus(x @ np.asarray(theta, dtype=np.float64))
        s2 = sign_plus(x @ np.asarray(theta_hat1, dtype=np.float64))
        return -y * (s1 - s2)


class QuantileModel(LossModel):
    """Pinball loss on the real line."""

    parameter_space = "real-line"

    def __init__(self, gamma: float):
        if not 0.0 < gamma < 1.0:
            raise ValueError(f"gamma must lie in (0,1), got {gamma}")
        self.gamma = gamma

    def loss(self, theta, z) -> float:
        return quantile_loss(float(theta), float(z), self.gamma)

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        x = np.asarray(d2, dtype=np.float64)
        return self._pinball(x, float(theta)) - self._pinball(x, float(theta_hat1))

    def loss_diffs_batch(self, thetas, theta_hat1, d2) -> np.ndarray:
        x = np.asarray(d2, dtype=np.float64)
        thetas = np.asarray(thetas, dtype=np.float64)
        base = self._pinball(x, float(theta_hat1))
        return self._pinball(x[None, :], thetas[:, None]) - base[None, :]

    def _pinball(self, x, theta):
        return self.gamma * np.maximum(x - theta, 0.0) + (1.0 - self.gamma) * (
            np.maximum(theta - x, 0.0)
        )


class ArgminModel(LossModel):
    """Coordinate-mean loss over the finite index set {1, ..., d}."""

    parameter_space = "index-set"

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {dimension}")
        self.dimension = dimension

    def loss(self, theta, z) -> float:
        return argmin_loss(int(theta), z)

    def loss_diffs(self, theta, theta_hat1, d2) -> np.ndarray:
        x = np.asarray(d2, dtype=np.float64)
        i, j = int(theta) - 1, int(theta_hat1) - 1
        if not (0 <= i < x.shape[1] and 0 <= j < x.shape[1]):
            raise ValueError("index outside 1..d")
        return x[:, i] - x[:, j]
