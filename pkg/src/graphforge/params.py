"""Parameter records for the three generators plus the matched-draw record.

Field names follow the configuration schema (snake_case); the documented
sampling ranges live in ``graphforge.config``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidParams


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


@dataclass(frozen=True)
class SbmParams:
    """Degree-corrected SBM inputs.

    ``pq_ratio`` is the intra/inter edge-probability ratio; the absolute
    probability scale is solved internally from ``avg_degree``.
    """

    nvertex: int
    avg_degree: float
    min_degree: int
    pq_ratio: float
    degree_exponent: float
    num_clusters: int
    cluster_size_slope: float
    fixed_community_sizes: tuple[int, ...] | None = None

    def validate(self) -> None:
        _require(self.num_clusters >= 2, "num_clusters must be >= 2")
        _require(self.nvertex >= self.num_clusters, "nvertex must be >= num_clusters")
        _require(self.avg_degree < self.nvertex, "avg_degree must be < nvertex")
        _require(self.avg_degree >= self.min_degree, "avg_degree must be >= min_degree")
        _require(self.min_degree >= 1, "min_degree must be >= 1")
        _require(self.pq_ratio >= 1.0, "pq_ratio must be >= 1")
        _require(0.0 <= self.cluster_size_slope <= 1.0, "cluster_size_slope must be in [0, 1]")
        if self.fixed_community_sizes is not None:
            sizes = self.fixed_community_sizes
            _require(len(sizes) == self.num_clusters, "fixed sizes must have num_clusters entries")
            _require(all(s >= 1 for s in sizes), "fixed community sizes must be positive")
            _require(sum(sizes) == self.nvertex, "fixed community sizes must sum to nvertex")


@dataclass(frozen=True)
class CabamParams:
    """Class-assortative preferential-attachment inputs.

    ``min_degree`` is the number of edges each arriving node adds;
    ``intra_link_strength`` is the kernel weight for same-label targets
    (1 - strength for cross-label targets).
    """

    nvertex: int
    min_degree: int
    intra_link_strength: float
    num_clusters: int
    cluster_size_slope: float
    fixed_community_sizes: tuple[int, ...] | None = None

    def validate(self) -> None:
        _require(self.num_clusters >= 2, "num_clusters must be >= 2")
        _require(self.min_degree >= 1, "min_degree must be >= 1")
        _require(self.nvertex > self.min_degree + 1, "nvertex must exceed min_degree + 1")
        _require(
            0.5 <= self.intra_link_strength <= 1.0,
            "intra_link_strength must be in [0.5, 1]",
        )
        _require(0.0 <= self.cluster_size_slope <= 1.0, "cluster_size_slope must be in [0, 1]")
        if self.fixed_community_sizes is not None:
            sizes = self.fixed_community_sizes
            _require(len(sizes) == self.num_clusters, "fixed sizes must have num_clusters entries")
            _require(all(s >= 1 for s in sizes), "fixed community sizes must be positive")


@dataclass(frozen=True)
class LfrParams:
    """LFR benchmark inputs.

    ``max_degree_proportion`` is a percentage of the node count (table
    values 2..20 mean a degree cap of 2%..20% of n).  ``mixing_param``
    is the target fraction of each node's edges leaving its community.
    """

    nvertex: int
    avg_degree: float
    max_degree_proportion: float
    mixing_param: float
    min_community_proportion: float
    max_community_proportion: float
    community_exponent: float
    degree_exponent: float
    num_tries: int = 20

    def validate(self) -> None:
        _require(self.nvertex >= 2, "nvertex must be >= 2")
        _require(self.avg_degree >= 1.0, "avg_degree must be >= 1")
        _require(
            0.0 < self.max_degree_proportion <= 100.0,
            "max_degree_proportion must be a percentage in (0, 100]",
        )
        _require(0.0 <= self.mixing_param <= 1.0, "mixing_param must be in [0, 1]")
        _require(
            0.0 < self.min_community_proportion <= self.max_community_proportion,
            "community proportions must satisfy 0 < min <= max",
        )
        _require(self.max_community_proportion <= 1.0, "max_community_proportion must be <= 1")
        _require(1.0 <= self.community_exponent <= 2.0, "community_exponent must be in [1, 2]")
        _require(2.0 <= self.degree_exponent <= 3.0, "degree_exponent must be in [2, 3]")
        _require(self.num_tries >= 1, "num_tries must be >= 1")


GeneratorParams = Union[SbmParams, CabamParams, LfrParams]


@dataclass(frozen=True)
class SharedDraw:
    """One draw of the parameters that play the same role in all three
    generators; fanned out by ``map_shared_to_generator``.

    ``degree_scale`` lives in the intersection range [2, 20] so it is a
    valid average degree for SBM/LFR and a valid per-node edge count for
    CABAM.  ``homophily`` in [0, 1] maps affinely onto each generator's
    homophily control.
    """

    nvertex: int
    degree_scale: float
    homophily: float
    num_clusters: int
    cluster_size_slope: float
    feature_center_distance: float

    def validate(self) -> None:
        _require(self.nvertex >= 2, "nvertex must be >= 2")
        _require(2.0 <= self.degree_scale <= 20.0, "degree_scale must be in [2, 20]")
        _require(0.0 <= self.homophily <= 1.0, "homophily must be in [0, 1]")
        _require(self.num_clusters >= 2, "num_clusters must be >= 2")
        _require(0.0 <= self.cluster_size_slope <= 1.0, "cluster_size_slope must be in [0, 1]")
        _require(self.feature_center_distance >= 0.0, "feature_center_distance must be >= 0")


@dataclass(frozen=True)
class FeatureParams:
    """Community-conditioned Gaussian feature inputs.

    ``center_distance`` is the per-dimension variance of the community
    centers (the tables describe it as a variance despite the name).
    """

    center_distance: float
    dim: int = 16

    def validate(self) -> None:
        _require(self.center_distance >= 0.0, "center_distance must be >= 0")
        _require(self.dim >= 1, "feature dim must be >= 1")
