"""Graph, label, and dataset value types shared by every other module.

All types are immutable after construction (arrays are marked read-only),
so instances can be shared freely across concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np


def sanitize_edges(n: int, edges) -> tuple[np.ndarray, int]:
    """Canonicalize an arbitrary edge list for a graph on nodes 0..n-1.

    Drops self loops, orients every pair so u < v, removes duplicates and
    sorts numerically by (u, v).  Returns the canonical (m, 2) int64 array
    and the number of entries dropped along the way.
    """
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64), 0
    arr = arr.reshape(-1, 2)
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError("edge endpoint outside 0..n-1")
    raw = len(arr)
    arr = arr[arr[:, 0] != arr[:, 1]]
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    canon = np.unique(np.column_stack([lo, hi]), axis=0)
    return canon, raw - len(canon)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: node count plus a canonical edge array.

    ``edges`` is (m, 2) int64 with u < v, sorted by (u, v); ``adjacency``
    holds one sorted int64 neighbor array per node, consistent with the
    edge set by construction.
    """

    n: int
    edges: np.ndarray
    adjacency: tuple[np.ndarray, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("node count must be nonnegative")
        canon, _ = sanitize_edges(n, edges)
        return cls(n=n, edges=_freeze(canon), adjacency=_build_adjacency(n, canon))

    def __post_init__(self):
        e = self.edges
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be an (m, 2) array")
        if len(e):
            if e.min() < 0 or e.max() >= self.n:
                raise ValueError("edge endpoint outside 0..n-1")
            if not (e[:, 0] < e[:, 1]).all():
                raise ValueError("edges must satisfy u < v")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length must equal n")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> np.ndarray:
        return self.adjacency[u]


def _build_adjacency(n: int, edges: np.ndarray) -> tuple[np.ndarray, ...]:
    if len(edges) == 0:
        return tuple(np.empty(0, dtype=np.int64) for _ in range(n))
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    counts = np.bincount(src[order], minlength=n)
    parts = np.split(dst[order], np.cumsum(counts)[:-1])
    return tuple(_freeze(p) for p in parts)


@dataclass(frozen=True)
class CommunityAssignment:
    """Node labels in 0..k-1; every community must be nonempty."""

    labels: np.ndarray
    k: int

    @classmethod
    def from_labels(cls, labels, k: int) -> "CommunityAssignment":
        return cls(labels=_freeze(np.asarray(labels, dtype=np.int64).copy()), k=k)

    def __post_init__(self):
        lab = self.labels
        if self.k < 1:
            raise ValueError("community count must be >= 1")
        if lab.ndim != 1 or len(lab) == 0:
            raise ValueError("labels must be a nonempty vector")
        if lab.min() < 0 or lab.max() >= self.k:
            raise ValueError("label outside 0..k-1")
        if len(np.unique(lab)) != self.k:
            raise ValueError("every community 0..k-1 must be nonempty")

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class DataSplit:
    """Disjoint train/val/test node index sets."""

    train: np.ndarray
    val: np.ndarray
    test: np.ndarray

    @classmethod
    def from_indices(cls, train, val, test) -> "DataSplit":
        to_arr = lambda x: _freeze(np.sort(np.asarray(x, dtype=np.int64)))
        return cls(train=to_arr(train), val=to_arr(val), test=to_arr(test))

    def __post_init__(self):
        parts = [self.train, self.val, self.test]
        total = sum(len(p) for p in parts)
        union = np.concatenate(parts) if total else np.empty(0, dtype=np.int64)
        if len(np.unique(union)) != total:
            raise ValueError("train/val/test must be pairwise disjoint")
        if total and union.min() < 0:
            raise ValueError("split indices must be nonnegative")


@dataclass(frozen=True)
class DatasetMeta:
    """Provenance record: fully determines the dataset it accompanies."""

    generator: str
    params: Mapping[str, Any]
    master_seed: int
    sample_index: int
    edges_dropped: int = 0
    info: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class GeneratedDataset:
    """One generated sample: graph, labels, features, split, provenance."""

    graph: Graph
    communities: CommunityAssignment
    features: np.ndarray
    split: DataSplit
    meta: DatasetMeta

    def __post_init__(self):
        n = self.graph.n
        if self.communities.n != n:
            raise ValueError("label vector length must equal node count")
        if self.features.ndim != 2 or self.features.shape[0] != n:
            raise ValueError("feature matrix must have one row per node")
        for part in (self.split.train, self.split.val, self.split.test):
            if len(part) and part.max() >= n:
                raise ValueError("split index outside 0..n-1")
        _freeze(self.features)

    @property
    def n(self) -> int:
        return self.graph.n


def degree_sequence(g: Graph) -> np.ndarray:
    """Per-node degrees; sums to twice the edge count."""
    if g.num_edges == 0:
        return np.zeros(g.n, dtype=np.int64)
    return np.bincount(g.edges.ravel(), minlength=g.n)


def community_sizes(c: CommunityAssignment) -> np.ndarray:
    """Size of each community 0..k-1; sums to n."""
    return np.bincount(c.labels, minlength=c.k)
