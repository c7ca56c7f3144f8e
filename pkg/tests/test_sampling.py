import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphforge import InvalidParams, power_law_mle, sample_community_sizes
from graphforge.sampling import (
    sample_degree_propensities,
    truncated_powerlaw,
    truncated_powerlaw_mean,
)


class TestCommunitySizes:
    def test_zero_slope_equalizes(self):
        assert sample_community_sizes(10, 2, 0.0).tolist() == [5, 5]

    def test_exact_linear_weights(self):
        # weights 1,2,3 over n=12 -> quotas 2,4,6 exactly
        assert sample_community_sizes(12, 3, 1.0).tolist() == [2, 4, 6]

    def test_floor_of_one_forces_uniformity(self):
        assert sample_community_sizes(5, 5, 1.0).tolist() == [1, 1, 1, 1, 1]

    def test_k_larger_than_n_rejected(self):
        with pytest.raises(InvalidParams):
            sample_community_sizes(3, 4, 0.5)

    @settings(max_examples=300)
    @given(
        n=st.integers(1, 500),
        k=st.integers(1, 30),
        slope=st.floats(0.0, 1.0, allow_nan=False),
    )
    def test_properties(self, n, k, slope):
        if k > n:
            return
        sizes = sample_community_sizes(n, k, slope)
        assert sizes.sum() == n
        assert sizes.min() >= 1
        assert (np.diff(sizes) >= 0).all()


class TestTruncatedPowerlaw:
    def test_support(self):
        rng = np.random.default_rng(0)
        x = truncated_powerlaw(rng, 2.5, 2.0, 50.0, 10000)
        assert x.min() >= 2.0 and x.max() <= 50.0

    def test_degenerate_support(self):
        rng = np.random.default_rng(0)
        assert (truncated_powerlaw(rng, 2.5, 3.0, 3.0, 5) == 3.0).all()

    @pytest.mark.parametrize("exponent", [0.2, 1.0, 2.0, 2.5, 3.0])
    def test_analytic_mean_matches_empirical(self, exponent):
        rng = np.random.default_rng(42)
        x = truncated_powerlaw(rng, exponent, 2.0, 200.0, 200_000)
        expected = truncated_powerlaw_mean(exponent, 2.0, 200.0)
        assert x.mean() == pytest.approx(expected, rel=0.02)

    def test_mean_monotone_in_lower_bound(self):
        means = [truncated_powerlaw_mean(2.5, lo, 100.0) for lo in (1.0, 2.0, 5.0, 20.0)]
        assert all(a < b for a, b in zip(means, means[1:]))


class TestDegreePropensities:
    def test_rescale_contract_tiny(self):
        rng = np.random.default_rng(7)
        theta = sample_degree_propensities(4, 2.0, 2, 2.0, rng)
        assert theta.mean() == pytest.approx(2.0, abs=1e-12)

    def test_rescale_contract_large(self):
        rng = np.random.default_rng(7)
        theta = sample_degree_propensities(10_000, 2.5, 2, 8.0, rng)
        assert abs(theta.mean() - 8.0) < 1e-9

    def test_exponent_recovered_by_mle(self):
        rng = np.random.default_rng(11)
        theta = sample_degree_propensities(10_000, 2.5, 2, 8.0, rng)
        assert 2.2 <= power_law_mle(theta) <= 2.8

    def test_avg_below_min_rejected(self):
        rng = np.random.default_rng(0)
        with pytest.raises(InvalidParams):
            sample_degree_propensities(100, 2.5, 5, 3.0, rng)

    def test_positive(self):
        rng = np.random.default_rng(3)
        theta = sample_degree_propensities(1000, 0.2, 2, 4.0, rng)
        assert (theta > 0).all()


def test_mle_formula_hand_example():
    # sanity anchor shared with the metrics tests
    assert power_law_mle([1, 1, 1, 2, 4]) == pytest.approx(1 + 5 / (3 * math.log(2)))
