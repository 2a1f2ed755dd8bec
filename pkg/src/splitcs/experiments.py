"""Deterministic Monte Carlo experiments: coverage and volume sweeps for the
mean model, a 2-D region raster, the quantile-region width sweep, and the
binary-choice coverage check.

Every replication draws from its own counter-based substream keyed by
(experiment id, setting, replication index), so results are byte-identical
for any worker count; aggregation is an ordered reduce over replication
indices.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .applications import (
    max_score_fit,
    quantile_region_scan,
    radius_bound,
    ssu_member_closed,
)
from .errors import NotPositiveDefiniteError
from .models import ManskiModel, MeanModel, sign_plus
from .regions import clt_member, diff_stats_batch, eb_member, split
from .rng import logistic_draws, normal_matrix, standard_normals, substream
from .special import std_normal_quantile
from .wald import wald_member, wald_region_from_data, wald_semi_axes

__all__ = [
    "ExperimentConfig",
    "Table",
    "coverage_experiment",
    "volume_experiment",
    "region_raster",
    "quantile_width_experiment",
    "manski_coverage_experiment",
]

# stream-key namespaces, one per experiment
_COVERAGE, _VOLUME, _RASTER, _QUANTILE, _MANSKI = 1, 2, 3, 4, 5

RASTER_CORRELATION = 0.3
RASTER_LEVELS = (0.95, 0.85, 0.75)


@dataclass(frozen=True)
class ExperimentConfig:
    master_seed: int = 1729
    replications: int = 1000
    n_total: int = 500
    dims: tuple[int, ...] = (2, 20, 50, 100)
    alpha: float = 0.05
    split_ratio: float = 0.5
    workers: int = 1
    grid_resolution: int = 201
    scan_resolution: int = 4001
    n_grid: tuple[int, ...] = (500, 2000)
    gamma: float = 0.5
    noise: str = "logistic"

    def __post_init__(self):
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if self.n_total < 8:
            raise ValueError(f"need n_total >= 8, got {self.n_total}")
        if any(d < 1 for d in self.dims):
            raise ValueError(f"dimensions must be >= 1, got {self.dims}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0,1), got {self.alpha}")
        if not 0.0 < self.split_ratio < 1.0:
            raise ValueError(f"split ratio must lie in (0,1), got {self.split_ratio}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.noise not in ("logistic", "normal"):
            raise ValueError(f"noise must be 'logistic' or 'normal', got {self.noise}")


@dataclass(frozen=True)
class Table:
    """One experiment's output: a fixed header and already-sorted rows."""

    name: str
    header: tuple[str, ...]
    rows: list[list]
    notes: dict = field(default_factory=dict)


def _run_indexed(fn, count: int, workers: int) -> list:
    """Evaluate fn(0..count-1), results ordered by index."""
    if workers <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def _coverage_se(hits: int, total: int) -> tuple[float, float]:
    p = hits / total
    return p, math.sqrt(p * (1.0 - p) / total)


def coverage_experiment(cfg: ExperimentConfig) -> Table:
    """Empirical coverage of the zero mean under N(0, I_d) for the Wald
    baseline and the split-sample tests with and without shrinkage."""
    rows = []
    for d in cfg.dims:
        model = MeanModel(d)
        zero = np.zeros(d)

        def one(rep, d=d, model=model, zero=zero):
            x = normal_matrix(
                substream(cfg.master_seed, (_COVERAGE, d, rep)), (cfg.n_total, d)
            )
            folds = split(x, cfg.split_ratio)
            theta_hat1 = folds.d1.mean(axis=0)
            xbar, cov = linalg.sample_moments(folds.d2)
            ss = clt_member(model, zero, theta_hat1, folds.d2, cfg.alpha, use_upper=False)
            ssu = ssu_member_closed(zero, theta_hat1, xbar, cov, folds.n, cfg.alpha)
            try:
                wald = wald_member(wald_region_from_data(x, cfg.alpha), zero)
            except NotPositiveDefiniteError:
                wald = None
            return ss, ssu, wald

        results = _run_indexed(one, cfg.replications, cfg.workers)
        ss_hits = sum(1 for r in results if r[0])
        ssu_hits = sum(1 for r in results if r[1])
        wald_fail = sum(1 for r in results if r[2] is None)
        wald_hits = sum(1 for r in results if r[2])
        n_inf = cfg.n_total - int(math.floor(cfg.split_ratio * cfg.n_total))
        for method, hits, fails in (
            ("ss", ss_hits, 0),
            ("ss+u", ssu_hits, 0),
            ("wald", wald_hits, wald_fail),
        ):
            denom = cfg.replications - fails
            p, se = _coverage_se(hits, denom)
            rows.append(
                [method, d, cfg.n_total, n_inf, cfg.alpha, cfg.replications, fails, p, se]
            )
    rows.sort(key=lambda r: (r[0], r[1]))
    return Table(
        name="coverage",
        header=(
            "method", "d", "N", "n", "alpha", "replications", "failures",
            "coverage", "mc_se",
        ),
        rows=rows,
    )


def volume_experiment(cfg: ExperimentConfig) -> Table:
    """Mean ratio of the containment radius of the shrunken split-sample
    region to the geometric mean of the Wald ellipsoid's semi-axes."""
    rows = []
    failures = {}
    for d in cfg.dims:
        def one(rep, d=d):
            x = normal_matrix(
                substream(cfg.master_seed, (_VOLUME, d, rep)), (cfg.n_total, d)
            )
            folds = split(x, cfg.split_ratio)
            theta_hat1 = folds.d1.mean(axis=0)
            xbar, cov = linalg.sample_moments(folds.d2)
            h = radius_bound(theta_hat1, xbar, cov, folds.n, cfg.alpha)
            try:
                axes = wald_semi_axes(wald_region_from_data(x, cfg.alpha))
            except NotPositiveDefiniteError:
                return None
            return math.exp(math.log(h) - float(np.mean(np.log(axes))))

        results = _run_indexed(one, cfg.replications, cfg.workers)
        ratios = np.array([r for r in results if r is not None])
        failures[d] = cfg.replications - ratios.size
        mean = float(ratios.mean())
        se = float(ratios.std(ddof=1) / math.sqrt(ratios.size)) if ratios.size > 1 else 0.0
        rows.append([d, cfg.n_total, cfg.alpha, cfg.replications, mean, se])
    rows.sort(key=lambda r: r[0])
    return Table(
        name="volume",
        header=("d", "N", "alpha", "replications", "ratio_mean", "ratio_se"),
        rows=rows,
        notes={"failures": failures},
    )


def region_raster(cfg: ExperimentConfig) -> Table:
    """Membership raster of the three bivariate mean regions on one dataset
    drawn from a correlated normal, at three confidence levels."""
    sigma = np.array([[1.0, RASTER_CORRELATION], [RASTER_CORRELATION, 1.0]])
    chol = linalg.cholesky_factor(sigma)
    g = normal_matrix(substream(cfg.master_seed, (_RASTER, 0, 0)), (cfg.n_total, 2))
    x = g @ chol.T

    folds = split(x, cfg.split_ratio)
    theta_hat1 = folds.d1.mean(axis=0)
    xbar, cov = linalg.sample_moments(folds.d2)
    n = folds.n
    alpha_min = 1.0 - max(RASTER_LEVELS)
    h = radius_bound(theta_hat1, xbar, cov, n, alpha_min)

    res = cfg.grid_resolution
    offsets = np.linspace(-3.0 * h, 3.0 * h, res)
    if res % 2 == 1:
        offsets[res // 2] = 0.0  # odd grids hit theta_hat1 exactly
    axis1 = theta_hat1[0] + offsets
    axis2 = theta_hat1[1] + offsets
    t1, t2 = np.meshgrid(axis1, axis2, indexing="ij")
    thetas = np.column_stack([t1.ravel(), t2.ravel()])

    model = MeanModel(2)
    means, variances, _ = diff_stats_batch(model, thetas, theta_hat1, folds.d2)
    gap = thetas - theta_hat1
    gap_sq = (gap * gap).sum(axis=1)

    wald_by_level = {
        level: wald_region_from_data(x, 1.0 - level) for level in RASTER_LEVELS
    }
    any_region = next(iter(wald_by_level.values()))
    y = linalg.solve_lower_many(any_region.chol, (thetas - any_region.center).T)
    quad = (y * y).sum(axis=0)

    rows = []
    for method in ("asymptotic", "ss", "ss+u"):
        for level in sorted(RASTER_LEVELS):
            if method == "asymptotic":
                member = quad <= wald_by_level[level].threshold
            else:
                z = std_normal_quantile(level)
                bound = z * np.sqrt(variances) / math.sqrt(n)
                if method == "ss+u":
                    bound = bound - gap_sq
                member = means <= bound
            member = member.reshape(res, res)
            for i in range(res):
                for j in range(res):
                    rows.append(
                        [method, level, float(axis1[i]), float(axis2[j]), int(member[i, j])]
                    )
    return Table(
        name="raster",
        header=("method", "level", "theta1", "theta2", "member"),
        rows=rows,
        notes={"theta_hat1": theta_hat1.tolist(), "half_width": 3.0 * h},
    )


def quantile_width_experiment(cfg: ExperimentConfig) -> Table:
    """Scan-grid width of the studentized quantile region under a standard
    normal DGP, swept over total sample sizes."""
    rows = []
    empty = {}
    for n_tot in cfg.n_grid:
        def one(rep, n_tot=n_tot):
            x = normal_matrix(substream(cfg.master_seed, (_QUANTILE, n_tot, rep)), (n_tot,))
            folds = split(x, cfg.split_ratio)
            scan = quantile_region_scan(
                folds.d1, folds.d2, cfg.gamma, cfg.alpha,
                resolution=cfg.scan_resolution,
            )
            return scan.width if math.isfinite(scan.width) and scan.width > 0.0 else None

        results = _run_indexed(one, cfg.replications, cfg.workers)
        widths = np.array([r for r in results if r is not None])
        empty[n_tot] = cfg.replications - widths.size
        mean = float(widths.mean())
        se = float(widths.std(ddof=1) / math.sqrt(widths.size)) if widths.size > 1 else 0.0
        rows.append([n_tot, cfg.gamma, cfg.alpha, cfg.replications, mean, se])
    rows.sort(key=lambda r: r[0])
    return Table(
        name="quantile-width",
        header=("n", "gamma", "alpha", "replications", "width_mean", "width_se"),
        rows=rows,
        notes={"empty_regions": empty},
    )


def manski_coverage_experiment(cfg: ExperimentConfig) -> Table:
    """Finite-sample coverage of the true direction in the binary-choice
    model under the concentration-based set."""
    d = 2
    theta_true = np.array([1.0, 0.0])
    model = ManskiModel(d)

    def one(rep):
        stream = substream(cfg.master_seed, (_MANSKI, cfg.n_total, rep))
        gen = stream.generator()
        x = standard_normals(gen, cfg.n_total * d).reshape(cfg.n_total, d)
        if cfg.noise == "logistic":
            eps = logistic_draws(gen, cfg.n_total)
        else:
            eps = standard_normals(gen, cfg.n_total)
        y = sign_plus(x @ theta_true + eps)
        folds = split((y, x), cfg.split_ratio)
        theta_hat1 = max_score_fit(folds.d1)
        return eb_member(model, theta_true, theta_hat1, folds.d2, cfg.alpha)

    results = _run_indexed(one, cfg.replications, cfg.workers)
    hits = sum(1 for r in results if r)
    p, se = _coverage_se(hits, cfg.replications)
    n_inf = cfg.n_total - int(math.floor(cfg.split_ratio * cfg.n_total))
    rows = [[n_inf, d, cfg.alpha, cfg.replications, p, se]]
    return Table(
        name="manski-coverage",
        header=("n", "d", "alpha", "replications", "coverage", "mc_se"),
        rows=rows,
    )
