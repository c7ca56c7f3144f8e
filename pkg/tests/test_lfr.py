import numpy as np
import pytest

from graphforge import (
    GenerationFailed,
    InvalidParams,
    LfrParams,
    child_rng,
    community_sizes,
    degree_sequence,
    edge_homogeneity,
    generate_lfr,
)


def params(**overrides):
    base = dict(
        nvertex=1024,
        avg_degree=16.0,
        max_degree_proportion=10.0,
        mixing_param=0.1,
        min_community_proportion=0.06,
        max_community_proportion=0.30,
        community_exponent=1.5,
        degree_exponent=2.5,
        num_tries=20,
    )
    base.update(overrides)
    return LfrParams(**base)


class TestGenerateLfr:
    @pytest.mark.parametrize("mu", [0.1, 0.5, 0.9])
    def test_mixing_controls_homogeneity(self, mu):
        values = [
            edge_homogeneity(*generate_lfr(params(mixing_param=mu), child_rng(s, "lfr"))[:2])
            for s in range(3)
        ]
        assert abs(np.median(values) - (1.0 - mu)) <= 0.05

    def test_same_seed_same_graph(self):
        g1, c1, _ = generate_lfr(params(), child_rng(4, "lfr"))
        g2, c2, _ = generate_lfr(params(), child_rng(4, "lfr"))
        assert np.array_equal(g1.edges, g2.edges)
        assert np.array_equal(c1.labels, c2.labels)

    def test_realized_mean_degree(self):
        ratios = []
        for seed in range(10):
            g, _, _ = generate_lfr(params(), child_rng(seed, "lfr"))
            ratios.append(degree_sequence(g).mean() / 16.0)
        assert abs(np.median(ratios) - 1.0) <= 0.15

    def test_community_sizes_within_bounds(self):
        g, c, _ = generate_lfr(params(), child_rng(11, "lfr"))
        sizes = community_sizes(c)
        assert sizes.min() >= round(0.06 * 1024)
        assert sizes.max() <= round(0.30 * 1024)

    def test_infeasible_internal_degrees_fail(self):
        # communities of ~5 nodes can never host internal degrees near 20
        p = params(
            nvertex=100,
            avg_degree=15.0,
            max_degree_proportion=50.0,
            mixing_param=0.0,
            min_community_proportion=0.05,
            max_community_proportion=0.05,
            num_tries=3,
        )
        with pytest.raises(GenerationFailed):
            generate_lfr(p, child_rng(1, "lfr"))

    def test_avg_degree_above_cap_rejected(self):
        p = params(nvertex=1000, avg_degree=25.0, max_degree_proportion=2.0)
        with pytest.raises(InvalidParams):
            generate_lfr(p, child_rng(1, "lfr"))

    def test_avg_degree_below_truncated_mean_rejected(self):
        # the truncated power law on [1, d_max] cannot average as low as 1.0
        p = params(nvertex=4096, avg_degree=1.0, max_degree_proportion=20.0, degree_exponent=2.0)
        with pytest.raises(InvalidParams):
            generate_lfr(p, child_rng(1, "lfr"))

    def test_tries_reported(self):
        _, _, info = generate_lfr(params(), child_rng(4, "lfr"))
        assert 1 <= info["tries_used"] <= 20
