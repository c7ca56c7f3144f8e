"""Parameter-space sampling and sweep orchestration.

Samples are independent work items: every stage of every sample draws
from its own derived stream, so output is identical for any worker
count and any execution order.  Rows are emitted ordered by
(generator, sample index).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .baselines import ppr_classifier, roc_auc_ovr
from .cabam import generate_cabam
from .config import SCHEMAS, SweepConfig
from .errors import (
    DegenerateSample,
    GenerationFailed,
    InfeasibleParams,
    InfeasibleSplit,
    InvalidParams,
    InvalidQuery,
    UndefinedAuc,
)
from .features import generate_features, make_split
from .graph import DatasetMeta, GeneratedDataset, community_sizes
from .lfr import generate_lfr
from .matching import map_shared_to_generator
from .metrics import GraphMetrics, compute_all
from .params import CabamParams, FeatureParams, LfrParams, SbmParams, SharedDraw
from .rng import child_rng, stage_seed
from .sbm import generate_sbm
from .storage import ResultRow, write_bundle

GENERATOR_FNS = {"sbm": generate_sbm, "cabam": generate_cabam, "lfr": generate_lfr}

KDE_GRID_POINTS = 256

_FAILURE_KINDS = (InvalidParams, InfeasibleParams, GenerationFailed, InfeasibleSplit, UndefinedAuc)


def _uniform(rng, kind: str, bounds) -> int | float:
    lo, hi = bounds
    if kind == "int":
        return int(rng.integers(int(lo), int(hi) + 1))
    return float(rng.uniform(lo, hi))


def sample_params(cfg: SweepConfig, generator: str, sample_index: int):
    """Draw one parameter record plus feature params for a sample.

    Unmatched mode draws every key uniformly from its configured range
    (SBM's avg_degree is drawn conditionally at or above the drawn
    min_degree so the record is always valid).  Matched mode draws the
    shared record once per index and fans it out.
    """
    if cfg.matched:
        return _sample_matched(cfg, generator, sample_index)
    rng = child_rng(cfg.master_seed, f"params:{generator}", sample_index)
    ranges = cfg.ranges[generator]
    schema = SCHEMAS[generator]
    drawn: dict[str, int | float] = {}
    for key, (kind, _, _) in schema.items():
        bounds = ranges[key]
        if generator == "sbm" and key == "avg_degree":
            continue  # drawn after min_degree below
        if generator == "sbm" and key == "min_degree":
            # keep the joint draw valid: avg_degree must reach min_degree
            avg_hi = float(ranges["avg_degree"][1])
            bounds = (bounds[0], min(float(bounds[1]), np.floor(avg_hi)))
            if bounds[0] > bounds[1]:
                raise InvalidParams("min_degree range lies above the avg_degree range")
        drawn[key] = _uniform(rng, kind, bounds)
    if generator == "sbm":
        lo, hi = ranges["avg_degree"]
        lo = max(float(lo), float(drawn["min_degree"]))
        drawn["avg_degree"] = float(rng.uniform(lo, hi))
    return _params_from_drawn(generator, drawn)


def _params_from_drawn(generator: str, drawn: dict):
    schema = SCHEMAS[generator]
    fields = {spec[2]: drawn[key] for key, spec in schema.items() if spec[2] is not None}
    params = {"sbm": SbmParams, "cabam": CabamParams, "lfr": LfrParams}[generator](**fields)
    feature = FeatureParams(
        center_distance=drawn["feature_center_distance"], dim=int(drawn["feature_dim"])
    )
    return params, feature


def _sample_matched(cfg: SweepConfig, generator: str, sample_index: int):
    shared_rng = child_rng(cfg.master_seed, "shared", sample_index)
    draw = SharedDraw(
        nvertex=int(shared_rng.integers(1028, 4097)),
        degree_scale=float(shared_rng.uniform(2.0, 20.0)),
        homophily=float(shared_rng.uniform(0.0, 1.0)),
        num_clusters=int(shared_rng.integers(2, 11)),
        cluster_size_slope=float(shared_rng.uniform(0.0, 1.0)),
        feature_center_distance=float(shared_rng.uniform(0.0, 2.0)),
    )
    map_rng = child_rng(cfg.master_seed, "matched-map", sample_index)
    sbm, cabam, lfr = map_shared_to_generator(draw, map_rng)
    params = {"sbm": sbm, "cabam": cabam, "lfr": lfr}[generator]
    return params, FeatureParams(center_distance=draw.feature_center_distance, dim=16)


def flatten_params(params, feature: FeatureParams) -> dict:
    """Flat config-key map recording exactly what was sampled."""
    generator = {SbmParams: "sbm", CabamParams: "cabam", LfrParams: "lfr"}[type(params)]
    schema = SCHEMAS[generator]
    flat = {}
    for key, (kind, _, field_name) in schema.items():
        if field_name is None:
            continue
        value = getattr(params, field_name)
        flat[key] = int(value) if kind == "int" else float(value)
    flat["feature_center_distance"] = float(feature.center_distance)
    flat["feature_dim"] = int(feature.dim)
    if getattr(params, "fixed_community_sizes", None) is not None:
        flat["fixed_community_sizes"] = [int(s) for s in params.fixed_community_sizes]
    return flat


def _fit_split_counts(sizes: np.ndarray, want_train: int, want_val: int) -> tuple[int, int]:
    """Shrink per-class counts so the smallest community can host them."""
    budget = int(sizes.min()) - 1
    if budget < 1:
        raise InfeasibleSplit("a community has fewer than two nodes")
    if want_train + want_val <= budget:
        return want_train, want_val
    train = max(1, min(want_train, budget * want_train // max(1, want_train + want_val)))
    val = min(want_val, budget - train)
    return train, val


def build_dataset(
    cfg: SweepConfig, generator: str, params, feature: FeatureParams, sample_index: int
) -> tuple[GeneratedDataset, dict]:
    """Generate graph + labels, then features and split, for one sample."""
    gen_rng = child_rng(cfg.master_seed, f"generate:{generator}", sample_index)
    graph, comms, info = GENERATOR_FNS[generator](params, gen_rng)
    feats = generate_features(
        comms, feature, child_rng(cfg.master_seed, f"features:{generator}", sample_index)
    )
    train_n, val_n = _fit_split_counts(
        community_sizes(comms), cfg.per_class_train, cfg.per_class_val
    )
    split = make_split(
        comms, train_n, val_n, child_rng(cfg.master_seed, f"split:{generator}", sample_index)
    )
    # The realized split sizes belong in meta so that (generator, params,
    # master_seed, sample_index) fully determines the dataset.
    info = {**info, "split_train_per_class": train_n, "split_val_per_class": val_n}
    meta = DatasetMeta(
        generator=generator,
        params=flatten_params(params, feature),
        master_seed=cfg.master_seed,
        sample_index=sample_index,
        edges_dropped=int(info.get("edges_dropped", 0)),
        info=info,
    )
    return GeneratedDataset(graph, comms, feats, split, meta), info


def regenerate_from_meta(meta) -> GeneratedDataset:
    """Rebuild a dataset from its provenance record, bit-exactly."""
    from .config import build_generator_params

    params, feature = build_generator_params(meta.generator, dict(meta.params))
    cfg = SweepConfig(
        generators=(meta.generator,),
        samples_per_generator=1,
        master_seed=meta.master_seed,
        per_class_train=int(meta.info.get("split_train_per_class", 10)),
        per_class_val=int(meta.info.get("split_val_per_class", 10)),
    )
    dataset, _ = build_dataset(cfg, meta.generator, params, feature, meta.sample_index)
    return dataset


def run_sample(cfg: SweepConfig, generator: str, sample_index: int):
    """One complete sample: params -> graph -> features/split -> metrics
    -> optional baseline.  Failures become status=failed rows."""
    seed = stage_seed(cfg.master_seed, f"sample:{generator}", sample_index)
    start = time.perf_counter()
    try:
        params, feature = sample_params(cfg, generator, sample_index)
    except _FAILURE_KINDS as exc:
        return (
            ResultRow(
                generator, sample_index, seed, "failed",
                f"{type(exc).__name__}: {exc}", {}, None, {},
                time.perf_counter() - start,
            ),
            None,
        )
    flat = flatten_params(params, feature)
    try:
        dataset, _ = build_dataset(cfg, generator, params, feature, sample_index)
        metrics = compute_all(dataset.graph, dataset.communities)
        scores: dict[str, float] = {}
        if cfg.run_baseline:
            score_matrix = ppr_classifier(dataset)
            scores["ppr"] = roc_auc_ovr(score_matrix, dataset.communities, dataset.split.test)
        row = ResultRow(
            generator, sample_index, seed, "ok", None, flat, metrics, scores,
            time.perf_counter() - start,
        )
        return row, dataset
    except _FAILURE_KINDS as exc:
        row = ResultRow(
            generator, sample_index, seed, "failed",
            f"{type(exc).__name__}: {exc}", flat, None, {},
            time.perf_counter() - start,
        )
        return row, None


def _bundle_dir(datasets_dir, generator: str, sample_index: int) -> Path:
    return Path(datasets_dir) / f"{generator}_{sample_index:05d}"


def _sweep_task(args):
    cfg, generator, index, datasets_dir = args
    row, dataset = run_sample(cfg, generator, index)
    if datasets_dir is not None and dataset is not None:
        write_bundle(dataset, _bundle_dir(datasets_dir, generator, index))
    return row


def sweep_tasks(cfg: SweepConfig) -> list[tuple[str, int]]:
    return [(g, i) for g in cfg.generators for i in range(cfg.samples_per_generator)]


def run_sweep(
    cfg: SweepConfig,
    workers: int = 1,
    datasets_dir=None,
    skip: Iterable[tuple[str, int]] = (),
) -> Iterator[ResultRow]:
    """Yield one row per requested sample, ordered by (generator, index).

    ``skip`` names (generator, index) pairs already completed (resumption).
    """
    cfg.validate()
    skip_set = set(skip)
    todo = [(g, i) for g, i in sweep_tasks(cfg) if (g, i) not in skip_set]
    if datasets_dir is not None:
        Path(datasets_dir).mkdir(parents=True, exist_ok=True)
    if workers <= 1:
        for generator, index in todo:
            yield _sweep_task((cfg, generator, index, datasets_dir))
    else:
        args = [(cfg, g, i, datasets_dir) for g, i in todo]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_sweep_task, args)


# ------------------------------------------------------------------- kde


@dataclass(frozen=True)
class KdeCurve:
    """Gaussian-kernel density on a uniform grid, trapezoid-normalized."""

    metric: str
    grid: np.ndarray
    density: np.ndarray
    bandwidth: float


def kde(values, grid_min=None, grid_max=None, metric: str = "") -> KdeCurve:
    """Gaussian KDE with Scott's bandwidth h = std * m^(-1/5).

    The grid defaults to the data range padded by three bandwidths; the
    density is renormalized so its trapezoidal integral over the grid is
    exactly one.
    """
    v = np.asarray(values, dtype=np.float64)
    v = v[np.isfinite(v)]
    if len(v) < 2:
        raise DegenerateSample("need at least two finite values")
    spread = float(v.std(ddof=1))
    if spread == 0.0:
        raise DegenerateSample("values have zero spread")
    h = spread * len(v) ** (-0.2)
    if grid_min is None:
        grid_min = float(v.min()) - 3.0 * h
    if grid_max is None:
        grid_max = float(v.max()) + 3.0 * h
    if not grid_min < grid_max:
        raise DegenerateSample("grid bounds must satisfy grid_min < grid_max")
    grid = np.linspace(grid_min, grid_max, KDE_GRID_POINTS)
    z = (grid[:, None] - v[None, :]) / h
    density = np.exp(-0.5 * z**2).sum(axis=1) / (len(v) * h * np.sqrt(2.0 * np.pi))
    density /= np.trapezoid(density, grid)
    return KdeCurve(metric=metric, grid=grid, density=density, bandwidth=h)


# ----------------------------------------------------------------- curves


def _metric_value(row: ResultRow, name: str):
    if row.metrics is not None and name in GraphMetrics.METRIC_NAMES:
        return getattr(row.metrics, name)
    if name in row.params:
        return row.params[name]
    return None


def metric_values(rows: Iterable[ResultRow], name: str) -> list[float]:
    """Finite values of a metric (or sampled parameter) over ok rows."""
    known = False
    out = []
    for row in rows:
        if name in GraphMetrics.METRIC_NAMES or name in row.params:
            known = True
        value = _metric_value(row, name)
        if value is not None and np.isfinite(value):
            out.append(float(value))
    if not known:
        raise InvalidQuery(f"unknown metric {name!r}")
    return out


def performance_curves(
    rows: Iterable[ResultRow], metric: str, model: str, buckets: int = 20
) -> list[tuple[str, float, float | None, int]]:
    """Equal-width bucketed mean AUC per generator.

    Returns (generator, bucket_center, mean_auc, count) tuples; buckets
    with no samples carry mean None and count 0.
    """
    rows = list(rows)
    if buckets < 1:
        raise InvalidQuery("buckets must be >= 1")
    metric_known = metric in GraphMetrics.METRIC_NAMES or any(
        metric in r.params for r in rows
    )
    if not metric_known:
        raise InvalidQuery(f"unknown metric {metric!r}")
    if not any(model in r.scores for r in rows):
        raise InvalidQuery(f"unknown model {model!r}")

    points: list[tuple[str, float, float]] = []
    generators: list[str] = []
    for row in rows:
        if row.generator not in generators:
            generators.append(row.generator)
        value = _metric_value(row, metric)
        if value is None or not np.isfinite(value) or model not in row.scores:
            continue
        points.append((row.generator, float(value), float(row.scores[model])))
    if not points:
        raise InvalidQuery(f"no rows carry both {metric!r} and {model!r}")

    xs = np.array([p[1] for p in points])
    lo, hi = float(xs.min()), float(xs.max())
    if lo == hi:
        hi = lo + 1.0  # single degenerate bucket span
    edges = np.linspace(lo, hi, buckets + 1)
    centers = (edges[:-1] + edges[1:]) / 2.0

    table: list[tuple[str, float, float | None, int]] = []
    for gen in generators:
        sums = np.zeros(buckets)
        counts = np.zeros(buckets, dtype=np.int64)
        for g, x, auc in points:
            if g != gen:
                continue
            b = min(int(np.searchsorted(edges, x, side="right")) - 1, buckets - 1)
            b = max(b, 0)
            sums[b] += auc
            counts[b] += 1
        for b in range(buckets):
            mean = float(sums[b] / counts[b]) if counts[b] else None
            table.append((gen, float(centers[b]), mean, int(counts[b])))
    return table
