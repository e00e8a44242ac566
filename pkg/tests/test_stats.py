import math

import numpy as np
import pytest

from belltest import (
    DegenerateVariance,
    FrequencyTable,
    VariableIndex,
    violation_test,
    wilson_interval,
)

A, B, C = VariableIndex.A, VariableIndex.B, VariableIndex.C


def table(nu1, nu2, nu3, counts=None):
    return FrequencyTable(
        nu_a_given_b_plus=nu1,
        nu_c_given_b_minus=nu2,
        nu_a_given_c_plus=nu3,
        first_answer_counts=counts or {},
    )


class TestWilsonInterval:
    def test_zero_successes_hits_floor(self):
        low, high = wilson_interval(0, 10, 0.95)
        assert low == 0.0
        assert 0.0 < high < 1.0

    def test_all_successes_hits_ceiling(self):
        low, high = wilson_interval(10, 10, 0.95)
        assert high == 1.0
        assert 0.0 < low < 1.0

    def test_midpoint_case_frozen_values(self):
        # Frozen from a separate evaluation of the closed-form expression.
        low, high = wilson_interval(50, 100, 0.95)
        assert low == pytest.approx(0.4038315303659956, abs=1e-12)
        assert high == pytest.approx(0.5961684696340044, abs=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            wilson_interval(5, 4, 0.95)
        with pytest.raises(ValueError):
            wilson_interval(0, 0, 0.95)
        with pytest.raises(ValueError):
            wilson_interval(1, 2, 1.0)

    def test_coverage_near_nominal(self):
        # 95% interval should cover the true p about 95% of the time.
        rng = np.random.default_rng(0)
        n, sims = 1000, 10_000
        for p in (0.1, 0.5, 0.9):
            successes = rng.binomial(n, p, size=sims)
            covered = 0
            for s in successes:
                low, high = wilson_interval(int(s), n, 0.95)
                covered += low <= p <= high
            assert 0.93 <= covered / sims <= 0.97

    def test_monotone_tightening(self):
        prev = wilson_interval(50, 100, 0.95)
        for n in (1000, 10_000):
            cur = wilson_interval(n // 2, n, 0.95)
            assert cur[1] - cur[0] < prev[1] - prev[0]
            prev = cur


class TestViolationTest:
    def test_null_center(self):
        result = violation_test(table((500, 1000), (250, 1000), (750, 1000)))
        assert result.margin_estimate == pytest.approx(0.0, abs=1e-15)
        assert result.p_value == pytest.approx(0.5, abs=1e-12)
        assert not result.significant_violation

    def test_negative_margin_significant(self):
        n = 100_000
        result = violation_test(
            table((n // 4, n), (n // 4, n), (3 * n // 4, n)), alpha=0.05
        )
        assert result.margin_estimate == pytest.approx(-0.25, abs=1e-12)
        assert result.p_value < 1e-6
        assert result.significant_violation

    def test_degenerate_variance_carries_margin(self):
        with pytest.raises(DegenerateVariance) as excinfo:
            violation_test(table((10, 10), (10, 10), (10, 10)))
        assert excinfo.value.margin == pytest.approx(1.0)
        assert not excinfo.value.violated

    def test_standard_error_matches_binomial_formula(self):
        result = violation_test(table((30, 100), (20, 200), (50, 80)))
        nu = (0.3, 0.1, 0.625)
        expected = math.sqrt(
            0.3 * 0.7 / 100 + 0.1 * 0.9 / 200 + 0.625 * 0.375 / 80
        )
        assert result.standard_error == pytest.approx(expected, abs=1e-15)
        assert result.z_statistic == pytest.approx(
            (nu[0] + nu[1] - nu[2]) / expected, abs=1e-12
        )

    def test_standard_error_shrinks_with_counts(self):
        small = violation_test(table((30, 100), (20, 100), (50, 100)))
        big = violation_test(table((300, 1000), (200, 1000), (500, 1000)))
        assert big.standard_error < small.standard_error

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            violation_test(table((1, 2), (1, 2), (1, 2)), alpha=0.0)

    def test_type_one_error_rate_controlled(self):
        # Simulated proportions at a strictly positive margin should almost
        # never be declared significant violations.
        rng = np.random.default_rng(1)
        n, sims, alpha = 2000, 1000, 0.05
        false_hits = 0
        for _ in range(sims):
            s1 = int(rng.binomial(n, 0.5))
            s2 = int(rng.binomial(n, 0.3))
            s3 = int(rng.binomial(n, 0.6))  # true margin +0.2
            result = violation_test(table((s1, n), (s2, n), (s3, n)), alpha=alpha)
            false_hits += result.significant_violation
        sigma = math.sqrt(alpha * (1 - alpha) / sims)
        assert false_hits / sims <= alpha + 3 * sigma
