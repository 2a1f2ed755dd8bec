"""Scalar special functions: normal CDF/quantile, log-gamma, regularized
incomplete gamma, and chi-square quantiles.

Everything here is self-contained (no scipy, no libm erf) so the outputs are
identical across platforms and backends.  Accuracy contracts: normal quantile
to 1e-10 absolute, chi-square quantile to 1e-8 absolute, log-gamma to 1e-12
relative.
"""

import math

_SQRT_PI = 1.7724538509055160273
_SQRT_2 = 1.4142135623730950488
_LOG_SQRT_2PI = 0.91893853320467274178
_EPS = 1e-17
_MAX_ITER = 500

# Lanczos coefficients, g = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def erf(x: float) -> float:
    """Error function via a non-alternating Taylor series for small |x| and
    a Lentz continued fraction for the complement elsewhere."""
    if x < 0.0:
        return -erf(-x)
    if x < 2.0:
        return _erf_series(x)
    return 1.0 - _erfc_cf(x)


def erfc(x: float) -> float:
    if x < 0.0:
        return 2.0 - erfc(-x)
    if x < 2.0:
        return 1.0 - _erf_series(x)
    return _erfc_cf(x)


def _erf_series(x: float) -> float:
    # erf(x) = 2x e^{-x^2}/sqrt(pi) * sum_n (2x^2)^n / (2n+1)!!; all terms
    # positive, so no cancellation.
    if x == 0.0:
        return 0.0
    x2 = 2.0 * x * x
    term = 1.0
    total = 1.0
    k = 1
    while k < _MAX_ITER:
        term *= x2 / (2 * k + 1)
        total += term
        if term < total * _EPS:
            break
        k += 1
    return 2.0 * x * math.exp(-x * x) / _SQRT_PI * total


def _erfc_cf(x: float) -> float:
    # erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    # evaluated by the modified Lentz method.
    tiny = 1e-300
    f = x if x != 0.0 else tiny
    c = f
    d = 0.0
    for k in range(1, _MAX_ITER):
        an = 0.5 * k
        d = x + an * d
        if abs(d) < tiny:
            d = tiny
        c = x + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x * x) / (_SQRT_PI * f)


def std_normal_cdf(z: float) -> float:
    """Phi(z), accurate in both tails."""
    return 0.5 * erfc(-z / _SQRT_2)


def std_normal_pdf(z: float) -> float:
    return math.exp(-0.5 * z * z - _LOG_SQRT_2PI)


def std_normal_quantile(p: float) -> float:
    """Inverse of Phi, absolute error <= 1e-10.

    Safeguarded Newton on Phi(z) - p with a bisection bracket; the starting
    point comes from the asymptotic tail expansion.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie strictly in (0,1), got {p}")
    if p == 0.5:
        return 0.0
    if p > 0.5:
        # 1 - p is exact for p >= 0.5, and the lower tail is where Phi keeps
        # full relative precision
        return -std_normal_quantile(1.0 - p)

    # crude tail start: Phi(-z) ~ phi(z)/z  =>  z ~ -sqrt(-2 log p)
    z = math.sqrt(-2.0 * math.log(p))
    z -= (math.log(2.0 * math.pi) + math.log(max(-2.0 * math.log(p), 1e-10))) / (
        2.0 * z
    )
    z = -abs(z)

    lo, hi = -40.0, 40.0
    for _ in range(200):
        f = std_normal_cdf(z) - p
        if f > 0.0:
            hi = z
        elif f < 0.0:
            lo = z
        else:
            return z
        pdf = std_normal_pdf(z)
        if pdf > 0.0:
            step = f / pdf
            z_new = z - step
        else:
            z_new = 0.5 * (lo + hi)
        if not lo < z_new < hi:
            z_new = 0.5 * (lo + hi)
        if abs(z_new - z) < 1e-13 * (1.0 + abs(z)):
            return z_new
        z = z_new
    return z


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0, relative error <= 1e-12 (Lanczos, g=7)."""
    if x <= 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection keeps the Lanczos sum in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    xx = x - 1.0
    total = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        total += _LANCZOS[i] / (xx + i)
    base = xx + 7.5
    return _LOG_SQRT_2PI + (xx + 0.5) * math.log(base) - base + math.log(total)


def reg_lower_gamma(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0."""
    if a <= 0.0:
        raise ValueError(f"shape must be positive, got {a}")
    if x < 0.0:
        raise ValueError(f"argument must be non-negative, got {x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return _gamma_p_series(a, x)
    return 1.0 - _gamma_q_cf(a, x)


def _gamma_p_series(a: float, x: float) -> float:
    term = 1.0 / a
    total = term
    n = 1
    while n < _MAX_ITER:
        term *= x / (a + n)
        total += term
        if abs(term) < abs(total) * _EPS:
            break
        n += 1
    return total * math.exp(-x + a * math.log(x) - log_gamma(a))


def _gamma_q_cf(a: float, x: float) -> float:
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(-x + a * math.log(x) - log_gamma(a))


def chi_square_cdf(d: int, x: float) -> float:
    if d < 1:
        raise ValueError(f"degrees of freedom must be >= 1, got {d}")
    if x <= 0.0:
        return 0.0
    return reg_lower_gamma(0.5 * d, 0.5 * x)


def chi_square_quantile(d: int, p: float) -> float:
    """Inverse chi-square CDF with ``d`` degrees of freedom, absolute error
    <= 1e-8; Newton on the regularized incomplete gamma with a bisection
    bracket fallback."""
    if d < 1 or d != int(d):
        raise ValueError(f"degrees of freedom must be a positive integer, got {d}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie strictly in (0,1), got {p}")
    d = int(d)

    # Wilson-Hilferty start, clamped into the open positive axis
    z = std_normal_quantile(p)
    w = 1.0 - 2.0 / (9.0 * d) + z * math.sqrt(2.0 / (9.0 * d))
    q = d * w * w * w if w > 0.0 else 0.5 * d * math.exp(z)
    q = max(q, 1e-300)

    lo, hi = 0.0, math.inf
    half = 0.5 * d
    log_norm = half * math.log(2.0) + log_gamma(half)
    for _ in range(200):
        f = chi_square_cdf(d, q) - p
        if f > 0.0:
            hi = q
        elif f < 0.0:
            lo = q
        else:
            return q
        log_pdf = (half - 1.0) * math.log(q) - 0.5 * q - log_norm
        step = f / math.exp(log_pdf) if log_pdf > -700.0 else math.nan
        q_new = q - step
        if not (lo < q_new < hi) or math.isnan(q_new):
            q_new = 0.5 * (lo + hi) if math.isfinite(hi) else 2.0 * q
        if abs(q_new - q) < 1e-12 * (1.0 + q):
            return q_new
        q = q_new
    return q
