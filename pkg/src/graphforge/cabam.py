"""Class-assortative Barabasi-Albert-style generator."""

from __future__ import annotations

import numpy as np

from .errors import GenerationFailed
from .graph import CommunityAssignment, Graph
from .params import CabamParams
from .sampling import sample_community_sizes

_LABEL_RESAMPLE_LIMIT = 100


def _draw_labels(
    n: int, k: int, probs: np.ndarray, rng: np.random.Generator
) -> tuple[np.ndarray, int]:
    """IID labels from the target size distribution, all k classes present."""
    for attempt in range(1, _LABEL_RESAMPLE_LIMIT + 1):
        labels = rng.choice(k, size=n, p=probs)
        if len(np.unique(labels)) == k:
            return labels, attempt
    raise GenerationFailed("could not draw a label vector covering every community")


def generate_cabam(
    params: CabamParams, rng: np.random.Generator
) -> tuple[Graph, CommunityAssignment, dict]:
    """Grow one CABAM graph with its community assignment.

    Starts from a complete graph on m+1 nodes (m = min_degree); each
    arriving node samples its label from the target community-size
    distribution and attaches m edges without replacement with
    probability proportional to deg_j * c(label_t, label_j), where c is
    intra_link_strength for matching labels and its complement otherwise.
    Targets bias the label distribution; exact sizes are not forced.
    Labels are post-mapped so realized sizes line up with the target
    sizes by rank.
    """
    params.validate()
    n, k, m = params.nvertex, params.num_clusters, params.min_degree
    p = params.intra_link_strength
    if params.fixed_community_sizes is not None:
        targets = np.asarray(params.fixed_community_sizes, dtype=np.float64)
    else:
        targets = sample_community_sizes(n, k, params.cluster_size_slope).astype(np.float64)
    labels, attempts = _draw_labels(n, k, targets / targets.sum(), rng)

    num_edges = m * (m + 1) // 2 + m * (n - m - 1)
    edges = np.empty((num_edges, 2), dtype=np.int64)
    seed_u, seed_v = np.triu_indices(m + 1, k=1)
    edges[: len(seed_u), 0] = seed_u
    edges[: len(seed_u), 1] = seed_v
    cursor = len(seed_u)

    deg = np.zeros(n, dtype=np.float64)
    deg[: m + 1] = m
    fallback_edges = 0
    for t in range(m + 1, n):
        weight = deg[:t] * np.where(labels[:t] == labels[t], p, 1.0 - p)
        positive = int((weight > 0).sum())
        if positive >= m:
            targets_t = rng.choice(t, size=m, replace=False, p=weight / weight.sum())
        else:
            # Too few positive-weight candidates (possible early on when
            # intra_link_strength is 1): keep the exact-edge-count growth
            # contract by filling uniformly from the zero-weight rest.
            pos_idx = np.flatnonzero(weight > 0)
            zero_idx = np.flatnonzero(weight == 0)
            extra = rng.choice(zero_idx, size=m - positive, replace=False)
            targets_t = np.concatenate([pos_idx, extra])
            fallback_edges += m - positive
        deg[targets_t] += 1
        deg[t] = m
        edges[cursor : cursor + m, 0] = targets_t
        edges[cursor : cursor + m, 1] = t
        cursor += m

    labels = _rank_align_labels(labels, targets)
    graph = Graph.from_edges(n, edges)
    assert graph.num_edges == num_edges
    assign = CommunityAssignment.from_labels(labels, k)
    info = {
        "edges_dropped": 0,
        "label_resample_attempts": attempts,
        "fallback_edges": fallback_edges,
    }
    return graph, assign, info


def _rank_align_labels(labels: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Permute label ids so realized sizes match target sizes by rank."""
    k = len(targets)
    realized = np.bincount(labels, minlength=k)
    realized_order = np.argsort(realized, kind="stable")
    target_order = np.argsort(targets, kind="stable")
    mapping = np.empty(k, dtype=np.int64)
    mapping[realized_order] = target_order
    return mapping[labels]
