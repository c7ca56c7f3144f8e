"""Macro one-vs-rest ROC-AUC via the rank-sum formula with midrank ties."""

from __future__ import annotations

import numpy as np


def _midranks(x: np.ndarray) -> np.ndarray:
    order = np.argsort(x, kind="stable")
    ranks = np.empty(len(x), dtype=np.float64)
    sx = x[order]
    i = 0
    while i < len(sx):
        j = i
        while j + 1 < len(sx) and sx[j + 1] == sx[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def macro_ovr_auc(scores: np.ndarray, labels: np.ndarray) -> float:
    """Unweighted mean over classes of the binary class-vs-rest AUC.

    Classes without both positives and negatives are skipped.
    """
    k = scores.shape[1]
    aucs = []
    for c in range(k):
        pos = labels == c
        n_pos = int(pos.sum())
        n_neg = len(labels) - n_pos
        if n_pos == 0 or n_neg == 0:
            continue
        ranks = _midranks(np.asarray(scores[:, c], dtype=np.float64))
        aucs.append((ranks[pos].sum() - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg))
    if not aucs:
        raise ValueError("no class had both positives and negatives")
    return float(np.mean(aucs))
