"""Degree-corrected stochastic block model generator."""

from __future__ import annotations

import numpy as np

from .errors import InfeasibleParams
from .graph import CommunityAssignment, Graph, sanitize_edges
from .params import SbmParams
from .sampling import sample_community_sizes, sample_degree_propensities

# Fixed Bernoulli-draw chunk size; must stay constant so the stream of
# random draws (and therefore the output) is independent of memory limits.
_PAIR_CHUNK = 2_000_000


def _intra_inter_mass(theta: np.ndarray, offsets: np.ndarray) -> tuple[float, float]:
    """Sums of theta_i * theta_j over intra- and inter-community pairs."""
    total = (theta.sum() ** 2 - (theta**2).sum()) / 2.0
    intra = 0.0
    for a in range(len(offsets) - 1):
        block = theta[offsets[a] : offsets[a + 1]]
        intra += (block.sum() ** 2 - (block**2).sum()) / 2.0
    return intra, total - intra


def generate_sbm(
    params: SbmParams, rng: np.random.Generator
) -> tuple[Graph, CommunityAssignment, dict]:
    """Generate one DC-SBM graph with its community assignment.

    Each pair (i, j) is an edge independently with probability
    min(1, theta_i * theta_j * omega), where omega is omega_in for
    same-community pairs and omega_out otherwise, omega_in / omega_out
    equals pq_ratio, and omega_out is solved in closed form so the
    expected average degree equals avg_degree.  The returned info dict
    records the clipped-pair fraction and dropped-edge count.
    """
    params.validate()
    n, k = params.nvertex, params.num_clusters
    if params.fixed_community_sizes is not None:
        sizes = np.asarray(params.fixed_community_sizes, dtype=np.int64)
    else:
        sizes = sample_community_sizes(n, k, params.cluster_size_slope)
    labels = np.repeat(np.arange(k), sizes)
    offsets = np.concatenate([[0], np.cumsum(sizes)])

    theta = sample_degree_propensities(
        n, params.degree_exponent, params.min_degree, params.avg_degree, rng
    )
    intra_mass, inter_mass = _intra_inter_mass(theta, offsets)
    # E[sum of degrees] = 2 (omega_in * intra_mass + omega_out * inter_mass).
    omega_out = n * params.avg_degree / (2.0 * (params.pq_ratio * intra_mass + inter_mass))
    omega_in = params.pq_ratio * omega_out

    edges_u: list[np.ndarray] = []
    edges_v: list[np.ndarray] = []
    clipped = 0
    total_pairs = 0
    for a in range(k):
        ia = np.arange(offsets[a], offsets[a + 1])
        for b in range(a, k):
            omega = omega_in if a == b else omega_out
            jb = np.arange(offsets[b], offsets[b + 1])
            rows_per_chunk = max(1, _PAIR_CHUNK // max(1, len(jb)))
            for start in range(0, len(ia), rows_per_chunk):
                rows = ia[start : start + rows_per_chunk]
                prob = omega * np.outer(theta[rows], theta[jb])
                if a == b:
                    # Upper triangle of the diagonal block only.
                    mask = rows[:, None] < jb[None, :]
                else:
                    mask = np.ones(prob.shape, dtype=bool)
                clipped += int((prob[mask] > 1.0).sum())
                total_pairs += int(mask.sum())
                hit = (rng.random(prob.shape) < np.minimum(prob, 1.0)) & mask
                ui, vj = np.nonzero(hit)
                edges_u.append(rows[ui])
                edges_v.append(jb[vj])

    clip_fraction = clipped / total_pairs if total_pairs else 0.0
    if clip_fraction > 0.5:
        raise InfeasibleParams(
            f"probability scale clips {clip_fraction:.0%} of pairs at 1"
        )

    stacked = np.column_stack([np.concatenate(edges_u), np.concatenate(edges_v)])
    canon, dropped = sanitize_edges(n, stacked)
    graph = Graph.from_edges(n, canon)
    assign = CommunityAssignment.from_labels(labels, k)
    info = {"edges_dropped": int(dropped), "clipped_pair_fraction": clip_fraction}
    return graph, assign, info
