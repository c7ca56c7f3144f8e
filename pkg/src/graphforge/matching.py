"""Cross-generator parameter matching and community-structure replication."""

from __future__ import annotations

import numpy as np

from .graph import CommunityAssignment, community_sizes
from .params import CabamParams, LfrParams, SbmParams, SharedDraw


def replicate_community_structure(c: CommunityAssignment) -> tuple[int, ...]:
    """Community sizes of an existing assignment, usable as
    ``fixed_community_sizes``.

    SBM reproduces the sizes exactly; CABAM uses them as its label
    sampling distribution.
    """
    return tuple(int(s) for s in community_sizes(c))


def map_shared_to_generator(
    s: SharedDraw, rng: np.random.Generator
) -> tuple[SbmParams, CabamParams, LfrParams]:
    """Fan one matched draw out to all three parameter records.

    Node count and community count/slope are copied verbatim; the degree
    scale becomes avg_degree (SBM, LFR) and min_degree (CABAM); the
    homophily control h maps to pq_ratio = 1 + 15h, intra_link_strength
    = 0.5 + 0.5h and mixing_param = 1 - h.  Per-generator leftovers
    (degree and community exponents, SBM min degree, LFR proportions)
    are drawn from their own table ranges via ``rng``.
    """
    s.validate()
    h = s.homophily
    sbm_min_degree = int(rng.integers(2, min(20, int(s.degree_scale)) + 1))
    sbm = SbmParams(
        nvertex=s.nvertex,
        avg_degree=s.degree_scale,
        min_degree=sbm_min_degree,
        pq_ratio=1.0 + 15.0 * h,
        degree_exponent=float(rng.uniform(0.2, 3.0)),
        num_clusters=s.num_clusters,
        cluster_size_slope=s.cluster_size_slope,
    )
    cabam = CabamParams(
        nvertex=s.nvertex,
        min_degree=int(np.clip(round(s.degree_scale), 2, 20)),
        intra_link_strength=0.5 + 0.5 * h,
        num_clusters=s.num_clusters,
        cluster_size_slope=s.cluster_size_slope,
    )
    lfr = LfrParams(
        nvertex=s.nvertex,
        avg_degree=s.degree_scale,
        max_degree_proportion=float(rng.uniform(2.0, 20.0)),
        mixing_param=1.0 - h,
        min_community_proportion=float(rng.uniform(0.05, 0.0825)),
        max_community_proportion=float(rng.uniform(0.25, 0.33)),
        community_exponent=float(rng.uniform(1.0, 2.0)),
        degree_exponent=float(rng.uniform(2.0, 3.0)),
        num_tries=20,
    )
    return sbm, cabam, lfr
