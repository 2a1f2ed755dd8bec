"""Independent oracles used by the tests.

Deliberately built from primitives the package does not use: quadrature for
distribution functions, bisection for quantiles, exact integer/half-integer
gamma values, and compensated summation for moments.
"""

import math

import numpy as np

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(48)


def _integrate(fn, lo: float, hi: float, panels: int) -> float:
    total = 0.0
    edges = np.linspace(lo, hi, panels + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        total += half * float(np.sum(_GL_WEIGHTS * fn(mid + half * _GL_NODES)))
    return total


def phi_oracle(z: float) -> float:
    """Standard normal CDF by quadrature of the density."""
    if z == 0.0:
        return 0.5
    density = lambda t: np.exp(-0.5 * t * t) / math.sqrt(2.0 * math.pi)
    panels = max(8, int(math.ceil(abs(z))) * 4)
    return 0.5 + _integrate(density, 0.0, z, panels)


def normal_quantile_oracle(p: float) -> float:
    lo, hi = -12.0, 12.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if phi_oracle(mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _gamma_exact(two_a: int) -> float:
    """Gamma(two_a / 2) exactly, for integer two_a >= 1."""
    if two_a % 2 == 0:
        return float(math.factorial(two_a // 2 - 1))
    n = (two_a - 1) // 2
    return math.factorial(2 * n) / (4.0**n * math.factorial(n)) * math.sqrt(math.pi)


def chi2_cdf_oracle(d: int, x: float) -> float:
    """Chi-square CDF by quadrature of the density (exact normalization)."""
    if x <= 0.0:
        return 0.0
    half = 0.5 * d
    norm = 2.0**half * _gamma_exact(d)

    def density(t):
        t = np.maximum(t, 1e-300)
        return np.exp((half - 1.0) * np.log(t) - 0.5 * t) / norm

    panels = max(16, int(math.ceil(x)))
    return _integrate(density, 0.0, x, panels)


def chi2_quantile_oracle(d: int, p: float) -> float:
    lo, hi = 0.0, 1e4
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if chi2_cdf_oracle(d, mid) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def mean_var_oracle(values) -> tuple[float, float]:
    """Compensated two-pass mean and (n-1)-denominator variance."""
    values = [float(v) for v in values]
    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, var
