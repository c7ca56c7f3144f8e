"""Bit-exact on-disk formats: dataset bundles and results files.

Everything is plain text (TSV/CSV/JSON lines).  Floats are written with
``repr``, which round-trips exactly and is locale-independent.  Format
versions are checked on load and mismatches rejected outright.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .errors import InvalidParams
from .graph import (
    CommunityAssignment,
    DataSplit,
    DatasetMeta,
    GeneratedDataset,
    Graph,
)
from .metrics import GraphMetrics

BUNDLE_FORMAT_VERSION = 1
RESULTS_SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    return repr(float(x))


# ---------------------------------------------------------------- bundles


def write_bundle(dataset: GeneratedDataset, out_dir) -> Path:
    """Write one dataset as edges.tsv / labels.csv / features.csv /
    split.json / meta.json under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "edges.tsv", "w", newline="\n") as fh:
        for u, v in dataset.graph.edges:
            fh.write(f"{u}\t{v}\n")

    with open(out / "labels.csv", "w", newline="\n") as fh:
        fh.write("node_id,label\n")
        for i, lab in enumerate(dataset.communities.labels):
            fh.write(f"{i},{lab}\n")

    dim = dataset.features.shape[1]
    with open(out / "features.csv", "w", newline="\n") as fh:
        fh.write("node_id," + ",".join(f"f{j}" for j in range(dim)) + "\n")
        for i in range(dataset.n):
            row = ",".join(_fmt(x) for x in dataset.features[i])
            fh.write(f"{i},{row}\n")

    split_obj = {
        "train": [int(x) for x in dataset.split.train],
        "val": [int(x) for x in dataset.split.val],
        "test": [int(x) for x in dataset.split.test],
    }
    (out / "split.json").write_text(json.dumps(split_obj, indent=1) + "\n")

    meta = dataset.meta
    meta_obj = {
        "format_version": BUNDLE_FORMAT_VERSION,
        "generator": meta.generator,
        "params": dict(meta.params),
        "master_seed": meta.master_seed,
        "sample_index": meta.sample_index,
        "edges_dropped": meta.edges_dropped,
        "info": dict(meta.info),
    }
    (out / "meta.json").write_text(json.dumps(meta_obj, indent=1) + "\n")
    return out


def load_bundle(bundle_dir) -> GeneratedDataset:
    """Load a bundle written by :func:`write_bundle`; exact round trip."""
    d = Path(bundle_dir)
    for name in ("edges.tsv", "labels.csv", "features.csv", "split.json", "meta.json"):
        if not (d / name).exists():
            raise FileNotFoundError(d / name)

    meta_obj = json.loads((d / "meta.json").read_text())
    if meta_obj.get("format_version") != BUNDLE_FORMAT_VERSION:
        raise InvalidParams(
            f"bundle format version {meta_obj.get('format_version')!r} "
            f"not supported (expected {BUNDLE_FORMAT_VERSION})"
        )

    label_lines = (d / "labels.csv").read_text().splitlines()
    if label_lines[0] != "node_id,label":
        raise InvalidParams("labels.csv header mismatch")
    labels = np.array([int(line.split(",")[1]) for line in label_lines[1:]], dtype=np.int64)
    n = len(labels)

    edge_text = (d / "edges.tsv").read_text().splitlines()
    edges = np.array(
        [[int(a) for a in line.split("\t")] for line in edge_text], dtype=np.int64
    ).reshape(-1, 2)

    feat_lines = (d / "features.csv").read_text().splitlines()
    header = feat_lines[0].split(",")
    if header[0] != "node_id" or any(h != f"f{j}" for j, h in enumerate(header[1:])):
        raise InvalidParams("features.csv header mismatch")
    feats = np.empty((n, len(header) - 1), dtype=np.float64)
    for line in feat_lines[1:]:
        parts = line.split(",")
        feats[int(parts[0])] = [float(x) for x in parts[1:]]

    split_obj = json.loads((d / "split.json").read_text())
    split = DataSplit.from_indices(split_obj["train"], split_obj["val"], split_obj["test"])

    graph = Graph.from_edges(n, edges)
    k = int(labels.max()) + 1 if n else 0
    communities = CommunityAssignment.from_labels(labels, k)
    meta = DatasetMeta(
        generator=meta_obj["generator"],
        params=meta_obj["params"],
        master_seed=meta_obj["master_seed"],
        sample_index=meta_obj["sample_index"],
        edges_dropped=meta_obj["edges_dropped"],
        info=meta_obj.get("info", {}),
    )
    return GeneratedDataset(graph, communities, feats, split, meta)


# ---------------------------------------------------------------- results


@dataclass(frozen=True)
class ResultRow:
    """One sweep sample: params, metrics, scores, and status.

    ``wall_time_sec`` is informational only and is deliberately excluded
    from the serialized schema so results files stay byte-identical
    across reruns and worker counts.
    """

    generator: str
    sample_index: int
    seed: int
    status: str
    reason: str | None
    params: dict[str, Any]
    metrics: GraphMetrics | None
    scores: dict[str, float]
    wall_time_sec: float = 0.0


def _metrics_to_obj(m: GraphMetrics | None):
    if m is None:
        return None
    obj = {name: getattr(m, name) for name in GraphMetrics.METRIC_NAMES}
    obj["degenerate"] = dict(m.degenerate)
    return obj


def _metrics_from_obj(obj) -> GraphMetrics | None:
    if obj is None:
        return None
    fields = {name: obj[name] for name in GraphMetrics.METRIC_NAMES}
    return GraphMetrics(degenerate=dict(obj.get("degenerate", {})), **fields)


def row_to_json(row: ResultRow) -> str:
    obj = {
        "generator": row.generator,
        "sample_index": row.sample_index,
        "seed": row.seed,
        "status": row.status,
        "reason": row.reason,
        "params": row.params,
        "metrics": _metrics_to_obj(row.metrics),
        "scores": row.scores,
    }
    return json.dumps(obj, separators=(",", ":"))


def row_from_json(line: str) -> ResultRow:
    obj = json.loads(line)
    return ResultRow(
        generator=obj["generator"],
        sample_index=obj["sample_index"],
        seed=obj["seed"],
        status=obj["status"],
        reason=obj["reason"],
        params=obj["params"],
        metrics=_metrics_from_obj(obj["metrics"]),
        scores=obj["scores"],
    )


def make_header(master_seed: int, config_digest: str) -> str:
    obj = {
        "schema_version": RESULTS_SCHEMA_VERSION,
        "master_seed": master_seed,
        "config_digest": config_digest,
    }
    return json.dumps(obj, separators=(",", ":"))


class ResultsWriter:
    """Line-buffered results writer; each row is flushed as it lands so an
    interrupted sweep leaves a resumable prefix."""

    def __init__(self, path, master_seed: int, config_digest: str, append: bool = False):
        self.path = Path(path)
        mode = "a" if append else "w"
        self._fh = open(self.path, mode, newline="\n")
        if not append:
            self._fh.write(make_header(master_seed, config_digest) + "\n")
            self._fh.flush()

    def write_row(self, row: ResultRow) -> None:
        self._fh.write(row_to_json(row) + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def read_results(path, allow_partial: bool = False) -> tuple[dict, list[ResultRow]]:
    """Parse a results file into (header, rows).

    With ``allow_partial`` a truncated final line is ignored, which is
    what resumption needs after an interrupt.
    """
    path = Path(path)
    text = path.read_text()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise InvalidParams("results file is empty")
    header = json.loads(lines[0])
    if header.get("schema_version") != RESULTS_SCHEMA_VERSION:
        raise InvalidParams(
            f"results schema version {header.get('schema_version')!r} "
            f"not supported (expected {RESULTS_SCHEMA_VERSION})"
        )
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        last = i == len(lines)
        try:
            rows.append(row_from_json(line))
        except (json.JSONDecodeError, KeyError):
            if last and allow_partial:
                break
            raise InvalidParams(f"unparseable results line {i}")
    return header, rows


def write_kde_csv(path, grid, density) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write("x,density\n")
        for x, y in zip(grid, density):
            fh.write(f"{_fmt(x)},{_fmt(y)}\n")


def write_curves_csv(path, table: Iterable[tuple]) -> None:
    """Rows of (generator, bucket_center, mean_auc | None, count)."""
    with open(path, "w", newline="\n") as fh:
        fh.write("generator,bucket_center,mean_auc,count\n")
        for gen, center, mean_auc, count in table:
            mean_s = "" if mean_auc is None else _fmt(mean_auc)
            fh.write(f"{gen},{_fmt(center)},{mean_s},{count}\n")
