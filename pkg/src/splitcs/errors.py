"""Exception types shared across the package."""


class SplitcsError(Exception):
    """Base class for package-specific failures."""


class NotPositiveDefiniteError(SplitcsError, ValueError):
    """A matrix required to be positive definite has a non-positive pivot.

    Typically signals a singular sample covariance, e.g. when the dimension
    reaches the sample size.
    """


class InsufficientDataError(SplitcsError, ValueError):
    """Too few observations for the requested statistic."""


class ConfigurationError(SplitcsError, ValueError):
    """Inconsistent method configuration (e.g. a bound-based method without a bound)."""


class ConvergenceError(SplitcsError, RuntimeError):
    """An iterative routine hit its iteration cap before reaching tolerance."""
