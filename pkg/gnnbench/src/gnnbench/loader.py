"""Reader for graphforge dataset bundles.

Parses the documented on-disk layout directly (edges.tsv, labels.csv,
features.csv, split.json, meta.json); this package never imports the
generator toolkit itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SUPPORTED_BUNDLE_VERSION = 1


class BundleError(RuntimeError):
    """Bundle directory is missing files or malformed."""


@dataclass
class Bundle:
    name: str
    edges: np.ndarray        # (m, 2), u < v
    labels: np.ndarray       # (n,)
    features: np.ndarray     # (n, d)
    train_idx: np.ndarray
    val_idx: np.ndarray
    test_idx: np.ndarray
    meta: dict

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_classes(self) -> int:
        return int(self.labels.max()) + 1


def load_bundle(bundle_dir) -> Bundle:
    d = Path(bundle_dir)
    try:
        meta = json.loads((d / "meta.json").read_text())
        if meta.get("format_version") != SUPPORTED_BUNDLE_VERSION:
            raise BundleError(f"unsupported bundle format in {d}")

        label_lines = (d / "labels.csv").read_text().splitlines()
        if label_lines[0] != "node_id,label":
            raise BundleError(f"bad labels header in {d}")
        labels = np.array([int(l.split(",")[1]) for l in label_lines[1:]], dtype=np.int64)
        n = len(labels)

        edge_lines = (d / "edges.tsv").read_text().splitlines()
        edges = np.array(
            [[int(x) for x in line.split("\t")] for line in edge_lines], dtype=np.int64
        ).reshape(-1, 2)
        if len(edges) and (edges.min() < 0 or edges.max() >= n):
            raise BundleError(f"edge endpoint out of range in {d}")

        feat_lines = (d / "features.csv").read_text().splitlines()
        dim = len(feat_lines[0].split(",")) - 1
        feats = np.empty((n, dim), dtype=np.float64)
        for line in feat_lines[1:]:
            parts = line.split(",")
            feats[int(parts[0])] = [float(x) for x in parts[1:]]

        split = json.loads((d / "split.json").read_text())
        return Bundle(
            name=d.name,
            edges=edges,
            labels=labels,
            features=feats,
            train_idx=np.asarray(split["train"], dtype=np.int64),
            val_idx=np.asarray(split["val"], dtype=np.int64),
            test_idx=np.asarray(split["test"], dtype=np.int64),
            meta=meta,
        )
    except (OSError, ValueError, KeyError, IndexError, json.JSONDecodeError) as exc:
        raise BundleError(f"cannot read bundle {d}: {exc}") from exc


def find_bundles(pattern: str) -> list[Path]:
    """Expand a glob into bundle directories, sorted by name."""
    import glob as _glob

    dirs = sorted(Path(p) for p in _glob.glob(pattern))
    return [d for d in dirs if d.is_dir()]
