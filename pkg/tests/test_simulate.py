"""Tests for the Monte Carlo power-verification machinery."""

import math

import numpy as np
import pytest

from plspower import (
    DegenerateSampleError,
    DomainError,
    PowerSpec,
    SimConfig,
    empirical_power,
    estimate_path,
    generate_dataset,
    validate_apriori,
)
from plspower import simulate

SPEC_05 = PowerSpec(0.05)


def _rng(seed=0):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


class TestSimConfig:
    def test_accepts_null_effect(self):
        assert SimConfig(0.0, 100, SPEC_05).true_path == 0.0

    @pytest.mark.parametrize("kwargs", [
        dict(true_path=1.0, n=50, spec=SPEC_05),
        dict(true_path=-0.1, n=50, spec=SPEC_05),
        dict(true_path=0.5, n=2, spec=SPEC_05),
        dict(true_path=0.5, n=50, spec=SPEC_05, replications=99),
        dict(true_path=0.5, n=50, spec=SPEC_05, seed=-1),
        dict(true_path=0.5, n=50, spec=SPEC_05, seed=2**64),
    ])
    def test_invariants(self, kwargs):
        with pytest.raises(DomainError):
            SimConfig(**kwargs)


class TestGenerateDataset:
    def test_independent_when_path_is_zero(self):
        x, y = generate_dataset(0.0, 1_000_000, _rng(1))
        assert abs(np.corrcoef(x, y)[0, 1]) < 0.005

    def test_near_degenerate_limit(self):
        x, y = generate_dataset(0.999, 10_000, _rng(2))
        assert np.corrcoef(x, y)[0, 1] > 0.99

    def test_large_sample_slope_calibration(self):
        x, y = generate_dataset(0.5, 1_000_000, _rng(3))
        p_hat, _ = estimate_path(x, y)
        assert abs(p_hat - 0.5) < 0.005

    def test_unit_variances(self):
        x, y = generate_dataset(0.6, 500_000, _rng(4))
        assert abs(x.std() - 1.0) < 0.01
        assert abs(y.std() - 1.0) < 0.01

    @pytest.mark.parametrize("rho", [1.0, -0.2])
    def test_rejects_bad_path(self, rho):
        with pytest.raises(DomainError):
            generate_dataset(rho, 10, _rng())


class TestEstimatePath:
    def test_perfect_fit(self):
        x = np.arange(10.0)
        assert estimate_path(x, x) == (1.0, 0.0)

    def test_perfect_negative_fit(self):
        x = np.arange(10.0)
        p_hat, se_hat = estimate_path(x, -x)
        assert (p_hat, se_hat) == (-1.0, 0.0)

    def test_hand_computed_fixture(self):
        # x = [1..5], y = [2,1,4,3,5]: centered cross products give
        # sxy = 8, sxx = syy = 10, so slope = 8/10 and
        # se = sqrt((1 - 0.64) / 3) = sqrt(0.12)
        p_hat, se_hat = estimate_path([1, 2, 3, 4, 5], [2, 1, 4, 3, 5])
        assert p_hat == pytest.approx(0.8, abs=1e-12)
        assert se_hat == pytest.approx(math.sqrt(0.12), abs=1e-12)

    def test_rejects_short_or_mismatched(self):
        with pytest.raises(DomainError):
            estimate_path([1.0, 2.0], [1.0, 2.0])
        with pytest.raises(DomainError):
            estimate_path([1.0, 2.0, 3.0], [1.0, 2.0])

    def test_zero_variance_raises(self):
        with pytest.raises(DegenerateSampleError):
            estimate_path([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])
        with pytest.raises(DegenerateSampleError):
            estimate_path([1.0, 2.0, 3.0], [4.0, 4.0, 4.0])


class TestEmpiricalPower:
    def test_null_rejection_rate_matches_alpha(self):
        est = empirical_power(SimConfig(0.0, 100, SPEC_05, 20_000, seed=7))
        assert abs(est.power_hat - 0.05) < 0.01

    def test_paper_example_sample_size_delivers_power(self):
        est = empirical_power(SimConfig(0.5, 25, SPEC_05, 20_000, seed=7))
        assert 0.78 <= est.power_hat <= 0.90

    def test_underpowered_small_sample(self):
        est = empirical_power(SimConfig(0.5, 10, SPEC_05, 20_000, seed=7))
        assert est.power_hat < 0.70

    def test_deterministic_given_seed(self):
        config = SimConfig(0.3, 40, SPEC_05, 500, seed=123)
        assert empirical_power(config) == empirical_power(config)

    def test_chunking_never_changes_the_result(self):
        config = SimConfig(0.3, 20, SPEC_05, 300, seed=99)
        baseline = empirical_power(config)
        assert empirical_power(config, chunk_size=1) == baseline
        assert empirical_power(config, chunk_size=7) == baseline

    def test_matches_sequential_public_api_loop(self):
        # replications must be exactly the generate/estimate pairs run
        # one-by-one from the same substreams
        config = SimConfig(0.4, 15, SPEC_05, 200, seed=17)
        z_crit = 1.6448536269514726
        rejections = 0
        for child in np.random.SeedSequence(17).spawn(200):
            gen = np.random.Generator(np.random.Philox(child))
            x, y = generate_dataset(0.4, 15, gen)
            p_hat, se_hat = estimate_path(x, y)
            stat = p_hat / se_hat if se_hat > 0 else math.inf * np.sign(p_hat)
            rejections += stat > z_crit
        assert empirical_power(config).rejections == rejections

    def test_estimate_invariants(self):
        est = empirical_power(SimConfig(0.5, 30, SPEC_05, 400, seed=3))
        assert est.power_hat == est.rejections / est.replications
        se = math.sqrt(est.power_hat * (1 - est.power_hat) / est.replications)
        assert est.std_error == pytest.approx(se, abs=1e-15)
        assert est.ci95[0] == pytest.approx(max(0.0, est.power_hat - 1.96 * se))
        assert est.ci95[1] == pytest.approx(min(1.0, est.power_hat + 1.96 * se))

    def test_ci_clamped_to_unit_interval(self):
        est = empirical_power(SimConfig(0.9, 200, SPEC_05, 200, seed=5))
        assert est.power_hat == 1.0
        assert est.ci95 == (1.0, 1.0)

    def test_power_monotone_in_n(self):
        estimates = [
            empirical_power(SimConfig(0.3, n, SPEC_05, 4000, seed=11))
            for n in (10, 25, 50, 100)
        ]
        for a, b in zip(estimates, estimates[1:]):
            slack = 3 * math.sqrt(a.std_error**2 + b.std_error**2)
            assert b.power_hat >= a.power_hat - slack

    def test_standard_error_scales_inverse_sqrt_n(self):
        # quadrupling n must halve the average slope standard error
        def mean_se(n, seed):
            total = 0.0
            for child in np.random.SeedSequence(seed).spawn(2000):
                gen = np.random.Generator(np.random.Philox(child))
                x, y = generate_dataset(0.3, n, gen)
                total += estimate_path(x, y)[1]
            return total / 2000

        ratio = mean_se(50, seed=21) / mean_se(200, seed=22)
        assert abs(ratio - 2.0) < 0.1

    def test_degenerate_samples_redrawn_and_counted(self, monkeypatch):
        real = simulate._uniforms
        state = {"calls": 0}

        def fake(child, count):
            state["calls"] += 1
            if state["calls"] <= 2:
                return np.full(count, 0.5)  # constant rows: zero variance
            return real(child, count)

        monkeypatch.setattr(simulate, "_uniforms", fake)
        est = empirical_power(SimConfig(0.3, 5, SPEC_05, 150, seed=31))
        assert est.degenerate_redraws == 2
        assert est.replications == 150


class TestValidateAPriori:
    def test_paper_anchor_passes(self):
        report = validate_apriori(0.5, SPEC_05, replications=2000, seed=42)
        assert report.n_required == 25
        assert report.passed is True
        assert report.small_sample_flag is False

    def test_small_effect(self):
        report = validate_apriori(0.2, SPEC_05, replications=2000, seed=42)
        assert report.n_required == 155
        assert report.passed is True

    def test_small_sample_flag_and_warning_propagate(self):
        report = validate_apriori(0.99, SPEC_05, replications=500, seed=42)
        assert report.n_required <= 10
        assert report.small_sample_flag is True
        assert "gamma-exponential" in report.warning

    def test_rejects_out_of_domain_mdes(self):
        with pytest.raises(DomainError):
            validate_apriori(1.5, SPEC_05, replications=500, seed=1)
