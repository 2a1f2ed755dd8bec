"""Split-sample confidence sets for M-estimation.

Data are divided into an estimation fold (any initial estimate) and an
inference fold that calibrates an implicit confidence region through
membership tests on loss differences.  The package ships the membership
machinery, five application loss models, the classical ellipsoid baseline,
and a deterministic Monte Carlo harness with a CLI.
"""

from .applications import (
    argmin_region,
    max_score_fit,
    ols_fit,
    quantile_region_scan,
    radius_bound,
    sample_quantile,
    ssu_member_closed,
)
from .errors import (
    ConfigurationError,
    ConvergenceError,
    InsufficientDataError,
    NotPositiveDefiniteError,
    SplitcsError,
)
from .kernels import BACKEND
from .linalg import cholesky_factor, cholesky_solve, sample_moments, sym_eigen
from .models import (
    ArgminModel,
    LinRegModel,
    LossModel,
    ManskiModel,
    MeanModel,
    QuantileModel,
)
from .regions import (
    ConfidenceRegion,
    DiffStats,
    Method,
    RegionSpec,
    SplitSample,
    clt_member,
    diff_stats,
    eb_member,
    eb_threshold,
    naive_member,
    region,
    split,
)
from .rng import RngStream, mvn_sample, substream
from .special import chi_square_quantile, log_gamma, std_normal_quantile
from .wald import (
    WaldRegion,
    axis_ratio,
    wald_log_volume,
    wald_member,
    wald_region_from_data,
    wald_semi_axes,
    wald_volume,
)

__version__ = "0.1.0"
