"""The six per-graph statistics used to position graphs in graph space."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np
import scipy.sparse as sp

from .errors import DegenerateGraph, DegenerateSequence
from .graph import CommunityAssignment, Graph, community_sizes, degree_sequence


def power_law_mle(degrees) -> float:
    """Continuous-approximation MLE of the power-law exponent.

    x_min is fixed at max(1, smallest positive degree); zero degrees are
    excluded.  alpha = 1 + n_tail / sum(log(x / x_min)) over the tail
    x >= x_min.
    """
    d = np.asarray(degrees, dtype=np.float64)
    positive = d[d > 0]
    if len(positive) == 0:
        raise DegenerateSequence("no positive degrees")
    x_min = max(1.0, float(positive.min()))
    tail = positive[positive >= x_min]
    if int((tail > x_min).sum()) < 2:
        raise DegenerateSequence("need at least two degrees strictly above x_min")
    return 1.0 + len(tail) / float(np.log(tail / x_min).sum())


def degree_gini(degrees) -> float:
    """Gini coefficient of a degree sequence: 0 = perfectly equal.

    G = sum_ij |d_i - d_j| / (2 n^2 mean); zero degrees participate.
    """
    d = np.asarray(degrees, dtype=np.float64)
    if len(d) == 0:
        raise DegenerateSequence("empty degree sequence")
    if (d < 0).any():
        raise DegenerateSequence("degrees must be nonnegative")
    total = d.sum()
    if total == 0:
        raise DegenerateSequence("all degrees are zero")
    x = np.sort(d)
    n = len(x)
    # Sorted-form identity for the pairwise absolute-difference sum.
    i = np.arange(n)
    return float(((2 * i + 1 - n) * x).sum() / (n * total))


def edge_homogeneity(g: Graph, c: CommunityAssignment) -> float:
    """Fraction of edges whose endpoints share a community label."""
    if g.num_edges == 0:
        raise DegenerateGraph("edge homogeneity undefined for an empty edge set")
    lab = c.labels
    return float((lab[g.edges[:, 0]] == lab[g.edges[:, 1]]).mean())


def _triangle_stats(g: Graph) -> tuple[int, np.ndarray]:
    """(total distinct triangles, per-node triangle counts).

    Common-neighbor counts per adjacent pair via the sparse product
    (A @ A) restricted to the edge positions of A.
    """
    n = g.n
    if g.num_edges == 0 or n < 3:
        return 0, np.zeros(n, dtype=np.int64)
    u, v = g.edges[:, 0], g.edges[:, 1]
    rows = np.concatenate([u, v])
    cols = np.concatenate([v, u])
    data = np.ones(len(rows), dtype=np.int32)
    adj = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
    paths = (adj @ adj).multiply(adj)
    per_node = np.asarray(paths.sum(axis=1)).ravel() // 2
    total = int(per_node.sum()) // 3
    return total, per_node.astype(np.int64)


def triangle_count(g: Graph) -> int:
    """Number of distinct 3-cliques, each counted once."""
    return _triangle_stats(g)[0]


def avg_clustering(g: Graph) -> float:
    """Mean local clustering coefficient; nodes of degree < 2 count as 0."""
    if g.n == 0:
        raise DegenerateGraph("average clustering undefined for an empty graph")
    _, per_node = _triangle_stats(g)
    deg = degree_sequence(g).astype(np.float64)
    pairs = deg * (deg - 1) / 2.0
    local = np.divide(per_node, pairs, out=np.zeros(g.n), where=pairs > 0)
    return float(local.mean())


def simpson_community(c: CommunityAssignment) -> float:
    """Simpson index of community sizes: sum over c of (n_c / n)^2."""
    frac = community_sizes(c) / c.n
    return float((frac**2).sum())


@dataclass(frozen=True)
class GraphMetrics:
    """The six statistics for one graph.

    A degenerate statistic is None, with the reason code recorded under
    the metric's name in ``degenerate`` (never silently zero).
    """

    power_law_estimate: float | None
    degree_gini: float | None
    edge_homogeneity: float | None
    avg_cc: float | None
    triangle_count: int | None
    simpson_community: float | None
    degenerate: Mapping[str, str] = field(default_factory=dict)

    METRIC_NAMES = (
        "power_law_estimate",
        "degree_gini",
        "edge_homogeneity",
        "avg_cc",
        "triangle_count",
        "simpson_community",
    )


def compute_all(g: Graph, c: CommunityAssignment) -> GraphMetrics:
    """All six statistics, degenerate ones null-marked with reason codes."""
    deg = degree_sequence(g)
    values: dict = {}
    reasons: dict[str, str] = {}

    def attempt(name, fn, *args):
        try:
            values[name] = fn(*args)
        except (DegenerateSequence, DegenerateGraph) as exc:
            values[name] = None
            reasons[name] = type(exc).__name__

    attempt("power_law_estimate", power_law_mle, deg)
    attempt("degree_gini", degree_gini, deg)
    attempt("edge_homogeneity", edge_homogeneity, g, c)
    attempt("avg_cc", avg_clustering, g)
    attempt("triangle_count", triangle_count, g)
    attempt("simpson_community", simpson_community, c)
    return GraphMetrics(degenerate=reasons, **values)
