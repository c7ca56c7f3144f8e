import numpy as np
import pytest

from graphforge import (
    InfeasibleParams,
    SbmParams,
    child_rng,
    community_sizes,
    degree_sequence,
    edge_homogeneity,
    generate_sbm,
)


def params(**overrides):
    base = dict(
        nvertex=2048,
        avg_degree=16.0,
        min_degree=2,
        pq_ratio=16.0,
        degree_exponent=2.5,
        num_clusters=2,
        cluster_size_slope=0.0,
    )
    base.update(overrides)
    return SbmParams(**base)


class TestGenerateSbm:
    def test_homogeneity_matches_expectation_high_ratio(self):
        # k=2 equal communities: expected intra fraction r/(r+1) = 16/17
        g, c, _ = generate_sbm(params(), child_rng(100, "sbm"))
        assert edge_homogeneity(g, c) == pytest.approx(16 / 17, abs=0.03)

    def test_homogeneity_half_when_ratio_one(self):
        g, c, _ = generate_sbm(params(pq_ratio=1.0), child_rng(100, "sbm"))
        assert edge_homogeneity(g, c) == pytest.approx(0.5, abs=0.03)

    def test_same_seed_same_graph(self):
        g1, c1, _ = generate_sbm(params(), child_rng(5, "sbm"))
        g2, c2, _ = generate_sbm(params(), child_rng(5, "sbm"))
        assert np.array_equal(g1.edges, g2.edges)
        assert np.array_equal(c1.labels, c2.labels)

    def test_different_seed_different_graph(self):
        g1, _, _ = generate_sbm(params(), child_rng(5, "sbm"))
        g2, _, _ = generate_sbm(params(), child_rng(6, "sbm"))
        assert not np.array_equal(g1.edges, g2.edges)

    def test_average_degree_near_target(self):
        g, _, _ = generate_sbm(params(), child_rng(17, "sbm"))
        assert degree_sequence(g).mean() == pytest.approx(16.0, rel=0.1)

    def test_fixed_community_sizes_exact(self):
        p = params(nvertex=512, num_clusters=3, fixed_community_sizes=(300, 200, 12))
        g, c, _ = generate_sbm(p, child_rng(3, "sbm"))
        assert community_sizes(c).tolist() == [300, 200, 12]

    def test_monotone_in_pq_ratio(self):
        means = []
        for ratio in (1.0, 4.0, 16.0):
            values = [
                edge_homogeneity(
                    *generate_sbm(
                        params(nvertex=512, num_clusters=4, pq_ratio=ratio),
                        child_rng(seed, "sbm"),
                    )[:2]
                )
                for seed in range(5)
            ]
            means.append(np.mean(values))
        assert means[0] < means[1] < means[2]

    def test_massive_clipping_rejected(self):
        # one dominant community: ~84% of pairs are intra and all clip at 1
        p = params(
            nvertex=48,
            avg_degree=47.0,
            min_degree=47,
            fixed_community_sizes=(4, 44),
        )
        with pytest.raises(InfeasibleParams):
            generate_sbm(p, child_rng(1, "sbm"))

    def test_clip_fraction_reported(self):
        _, _, info = generate_sbm(params(), child_rng(100, "sbm"))
        assert 0.0 <= info["clipped_pair_fraction"] < 0.01
