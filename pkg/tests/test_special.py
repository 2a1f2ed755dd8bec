import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitcs.special import (
    chi_square_cdf,
    chi_square_quantile,
    erf,
    erfc,
    log_gamma,
    reg_lower_gamma,
    std_normal_cdf,
    std_normal_quantile,
)

from _oracles import chi2_quantile_oracle, normal_quantile_oracle, phi_oracle

PROB_GRID = [k / 100.0 for k in range(1, 100)]


class TestNormalQuantile:
    def test_median_is_zero(self):
        assert std_normal_quantile(0.5) == 0.0

    def test_known_value(self):
        assert std_normal_quantile(0.95) == pytest.approx(1.6448536269514722, abs=1e-10)

    def test_against_bisection_oracle(self):
        for p in (0.001, 0.025, 0.2, 0.6, 0.975, 0.999):
            assert std_normal_quantile(p) == pytest.approx(
                normal_quantile_oracle(p), abs=1e-8
            )

    @pytest.mark.parametrize("p", [0.01, 0.1, 0.3])
    def test_symmetry(self, p):
        assert std_normal_quantile(p) == pytest.approx(
            -std_normal_quantile(1.0 - p), abs=1e-12
        )

    def test_roundtrip_on_grid(self):
        # Phi computed by quadrature, independently of the erf implementation
        for p in PROB_GRID:
            z = std_normal_quantile(p)
            assert phi_oracle(z) == pytest.approx(p, abs=1e-8)

    def test_extreme_tails_are_finite_and_ordered(self):
        z_lo = std_normal_quantile(1e-12)
        assert -6.5 > z_lo > -8.0
        assert std_normal_cdf(z_lo) == pytest.approx(1e-12, rel=1e-6)
        # 1 - 2^-20 is exactly representable, so the reflection is exact
        p = 2.0**-20
        assert std_normal_quantile(1.0 - p) == -std_normal_quantile(p)

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.2, 1.7])
    def test_domain_errors(self, p):
        with pytest.raises(ValueError):
            std_normal_quantile(p)

    @given(st.floats(min_value=1e-6, max_value=1.0 - 1e-6))
    @settings(max_examples=60, deadline=None)
    def test_cdf_inverts_quantile(self, p):
        assert std_normal_cdf(std_normal_quantile(p)) == pytest.approx(p, abs=1e-12)


class TestErf:
    def test_series_cf_seam(self):
        # the two evaluation branches must agree around the switch point
        for x in (1.999999, 2.0, 2.000001, 2.5, 3.0):
            assert erf(x) + erfc(x) == pytest.approx(1.0, abs=1e-14)

    def test_odd_symmetry(self):
        for x in (0.3, 1.1, 2.7):
            assert erf(-x) == pytest.approx(-erf(x), abs=1e-15)


class TestChiSquareQuantile:
    def test_exponential_closed_form_on_grid(self):
        for p in PROB_GRID:
            assert chi_square_quantile(2, p) == pytest.approx(
                -2.0 * math.log(1.0 - p), abs=1e-8
            )

    def test_one_dof_matches_squared_normal(self):
        assert chi_square_quantile(1, 0.95) == pytest.approx(
            std_normal_quantile(0.975) ** 2, abs=1e-8
        )

    def test_ten_dof_median_vs_integration_oracle(self):
        assert chi_square_quantile(10, 0.5) == pytest.approx(
            chi2_quantile_oracle(10, 0.5), abs=1e-8
        )

    def test_cdf_roundtrip(self):
        for d in (1, 3, 10, 100):
            for p in (0.05, 0.5, 0.95):
                q = chi_square_quantile(d, p)
                assert chi_square_cdf(d, q) == pytest.approx(p, abs=1e-10)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            chi_square_quantile(0, 0.5)
        with pytest.raises(ValueError):
            chi_square_quantile(3, 0.0)
        with pytest.raises(ValueError):
            chi_square_quantile(3, 1.0)


class TestLogGamma:
    def test_known_values(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-12)
        assert log_gamma(6.0) == pytest.approx(math.log(120.0), rel=1e-12)

    @given(st.floats(min_value=0.05, max_value=60.0))
    @settings(max_examples=80, deadline=None)
    def test_recursion(self, x):
        assert log_gamma(x + 1.0) == pytest.approx(
            log_gamma(x) + math.log(x), rel=1e-11, abs=1e-11
        )

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-1.5)


class TestRegLowerGamma:
    def test_exponential_special_case(self):
        # a=1 reduces to 1 - exp(-x)
        for x in (0.1, 1.0, 5.0):
            assert reg_lower_gamma(1.0, x) == pytest.approx(-np.expm1(-x), rel=1e-13)

    def test_monotone_in_x(self):
        values = [reg_lower_gamma(2.5, x) for x in np.linspace(0.1, 20.0, 40)]
        assert all(b > a for a, b in zip(values, values[1:]))
