"""Shared fixtures: dataset bundles produced through the graphforge CLI
(the only interface this package is allowed to consume)."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

GRAPHFORGE = [sys.executable, "-m", "graphforge.cli"]


def run_graphforge(*args):
    proc = subprocess.run(
        GRAPHFORGE + list(args), capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0, f"graphforge {' '.join(args)} failed: {proc.stderr}"
    return proc


def make_sbm_bundle(tmp_dir: Path, name: str, seed: int, **overrides) -> Path:
    cfg = {
        "nvertex": 1028,
        "avg_degree": 32.0,
        "min_degree": 16,
        "pq_ratio": 16.0,
        "exponent": 3.0,
        "num_clusters": 4,
        "cluster_size_slope": 0.0,
        "feature_center_distance": 2.0,
        "feature_dim": 16,
    }
    cfg.update(overrides)
    cfg_path = tmp_dir / f"{name}.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_dir / name
    run_graphforge("generate", "--generator", "sbm", "--config", str(cfg_path),
                   "--seed", str(seed), "--out", str(out))
    return out


@pytest.fixture(scope="session")
def bundles_dir(tmp_path_factory) -> Path:
    return tmp_path_factory.mktemp("bundles")


@pytest.fixture(scope="session")
def easy_bundle(bundles_dir) -> Path:
    """Homophilous SBM with strong feature signal: every model's softball."""
    return make_sbm_bundle(bundles_dir, "easy", seed=11)


@pytest.fixture(scope="session")
def featureless_bundle(bundles_dir) -> Path:
    """center_distance=0: features carry no class information."""
    return make_sbm_bundle(bundles_dir, "featureless", seed=12, feature_center_distance=0.0)


@pytest.fixture(scope="session")
def swept_results(tmp_path_factory) -> tuple[Path, Path]:
    """A small matched sweep with exported bundles: (results.jsonl, datasets dir)."""
    root = tmp_path_factory.mktemp("sweep")
    cfg = {
        "generators": ["sbm", "cabam"],
        "samples_per_generator": 2,
        "master_seed": 77,
        "run_baseline": True,
        "ranges": {
            "sbm": {"nvertex": [200, 300], "avg_degree": [8.0, 12.0], "num_clusters": [2, 3]},
            "cabam": {"nvertex": [200, 300], "num_clusters": [2, 3]},
        },
    }
    cfg_path = root / "sweep.json"
    cfg_path.write_text(json.dumps(cfg))
    results = root / "results.jsonl"
    datasets = root / "datasets"
    run_graphforge("sweep", "--config", str(cfg_path), "--out", str(results),
                   "--datasets-dir", str(datasets))
    return results, datasets
