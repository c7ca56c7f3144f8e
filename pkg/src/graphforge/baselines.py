"""Personalized-PageRank baseline classifier and the one-vs-rest AUC scorer."""

from __future__ import annotations

import warnings

import numpy as np
import scipy.sparse as sp
from scipy.stats import rankdata

from .errors import InvalidParams, UndefinedAuc, UndefinedAucWarning
from .graph import CommunityAssignment, GeneratedDataset, Graph, degree_sequence

DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITERS = 1000


def ppr_scores(
    g: Graph,
    seeds,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> np.ndarray:
    """Personalized PageRank mass for every node.

    Power iteration on pi = (1 - damping) * s + damping * pi @ P with s
    uniform over the seeds; dangling nodes teleport back to the seeds, so
    the output stays a probability distribution at every iteration.
    """
    seeds = np.asarray(sorted(set(int(x) for x in seeds)), dtype=np.int64)
    if len(seeds) == 0:
        raise InvalidParams("seed set must be nonempty")
    if not 0.0 <= damping < 1.0:
        raise InvalidParams("damping must be in [0, 1)")
    n = g.n
    s = np.zeros(n)
    s[seeds] = 1.0 / len(seeds)

    deg = degree_sequence(g).astype(np.float64)
    dangling = deg == 0
    if g.num_edges:
        u, v = g.edges[:, 0], g.edges[:, 1]
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        data = 1.0 / deg[rows]
        walk = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
    else:
        walk = sp.csr_matrix((n, n))

    pi = s.copy()
    for _ in range(max_iters):
        new = (1.0 - damping) * s + damping * (pi @ walk + pi[dangling].sum() * s)
        delta = np.abs(new - pi).sum()
        pi = new
        if delta < tol:
            break
    return pi


def ppr_classifier(
    d: GeneratedDataset,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> np.ndarray:
    """Score matrix whose column c is the PPR mass seeded by the train
    nodes of class c.  Features are not used."""
    labels = d.communities.labels
    scores = np.zeros((d.n, d.communities.k))
    for label in range(d.communities.k):
        seeds = d.split.train[labels[d.split.train] == label]
        scores[:, label] = ppr_scores(d.graph, seeds, damping, tol, max_iters)
    return scores


def roc_auc_ovr(scores: np.ndarray, truth: CommunityAssignment, eval_set) -> float:
    """Unweighted macro one-vs-rest ROC-AUC over the evaluation nodes.

    Per-class binary AUC uses the rank-sum formula with midrank tie
    handling.  Classes without both positives and negatives in the
    evaluation set are skipped with an UndefinedAucWarning.
    """
    eval_idx = np.asarray(sorted(set(int(x) for x in eval_set)), dtype=np.int64)
    if len(eval_idx) == 0:
        raise InvalidParams("evaluation set must be nonempty")
    labels = truth.labels[eval_idx]
    aucs = []
    for label in range(truth.k):
        pos = labels == label
        n_pos = int(pos.sum())
        n_neg = len(labels) - n_pos
        if n_pos == 0 or n_neg == 0:
            warnings.warn(
                f"class {label} has no {'positives' if n_pos == 0 else 'negatives'} "
                "in the evaluation set; skipped",
                UndefinedAucWarning,
            )
            continue
        ranks = rankdata(scores[eval_idx, label])
        rank_sum = ranks[pos].sum()
        aucs.append((rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg))
    if not aucs:
        raise UndefinedAuc("no class had both positives and negatives")
    return float(np.mean(aucs))
