"""Bench runner: trains models over bundles and writes rows in the
graphforge results-file schema (schema version 1).

When an input results file is given, its rows are augmented in place
(scores gain one entry per model) so row count, order, and every other
field are preserved.  Without one, standalone rows are built from each
bundle's metadata with null metrics.

Bundles are independent work items (one dataset per process task); CPU
training itself is deterministic for a fixed seed up to framework
nondeterminism.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .loader import BundleError, find_bundles, load_bundle
from .models import SUPPORTED_MODELS
from .train import TrainConfig, train_and_score

RESULTS_SCHEMA_VERSION = 1
ROW_FIELDS = ("generator", "sample_index", "seed", "status", "reason", "params", "metrics", "scores")


@dataclass(frozen=True)
class BenchRunConfig:
    dataset_glob: str
    models: tuple[str, ...]
    out_path: str
    results_in: str | None = None
    train: TrainConfig = field(default_factory=TrainConfig)
    workers: int = 1

    def validate(self) -> None:
        unknown = [m for m in self.models if m not in SUPPORTED_MODELS]
        if unknown:
            raise ValueError(f"unsupported models: {', '.join(unknown)}")
        if not self.models:
            raise ValueError("need at least one model")


def _read_results(path) -> tuple[dict, list[dict]]:
    lines = Path(path).read_text().splitlines()
    header = json.loads(lines[0])
    if header.get("schema_version") != RESULTS_SCHEMA_VERSION:
        raise ValueError(f"unsupported results schema in {path}")
    return header, [json.loads(line) for line in lines[1:]]


def _write_results(path, header: dict, rows: list[dict]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(json.dumps(header, separators=(",", ":")) + "\n")
        for obj in rows:
            ordered = {key: obj.get(key) for key in ROW_FIELDS}
            fh.write(json.dumps(ordered, separators=(",", ":")) + "\n")


def _bench_one(args) -> dict:
    """Worker task: every requested model on one bundle."""
    bundle_dir, models, train_cfg, single_thread = args
    if single_thread:
        import torch

        torch.set_num_threads(1)
    out = {"dir": str(bundle_dir), "meta": None, "scores": {}, "model_errors": {}, "error": None}
    try:
        bundle = load_bundle(bundle_dir)
    except BundleError as exc:
        out["error"] = str(exc)
        return out
    out["meta"] = bundle.meta
    for model in models:
        try:
            out["scores"][model] = train_and_score(bundle, model, train_cfg)
        except Exception as exc:  # noqa: BLE001 - a bad bundle must not kill the run
            out["model_errors"][model] = str(exc)
    return out


def _standalone_row(dir_name: str, meta: dict | None, error: str | None) -> dict:
    meta = meta or {}
    return {
        "generator": meta.get("generator", dir_name),
        "sample_index": meta.get("sample_index", -1),
        "seed": meta.get("master_seed", 0),
        "status": "ok" if error is None else "failed",
        "reason": error,
        "params": meta.get("params", {}),
        "metrics": None,
        "scores": {},
    }


def run_bench(cfg: BenchRunConfig, log=print) -> list[dict]:
    """Train every model on every bundle and write the augmented rows."""
    cfg.validate()
    bundle_dirs = find_bundles(cfg.dataset_glob)
    if not bundle_dirs:
        raise FileNotFoundError(f"no bundle directories match {cfg.dataset_glob!r}")

    if cfg.results_in is not None:
        header, rows = _read_results(cfg.results_in)
        by_key = {(obj["generator"], obj["sample_index"]): obj for obj in rows}
    else:
        header = {"schema_version": RESULTS_SCHEMA_VERSION, "master_seed": 0, "config_digest": "bench"}
        rows, by_key = [], {}

    header = {**header, "bench": {"models": list(cfg.models), **cfg.train.metadata()}}

    tasks = [(d, cfg.models, cfg.train, cfg.workers > 1) for d in bundle_dirs]
    if cfg.workers <= 1:
        outcomes = map(_bench_one, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.workers)
        outcomes = pool.map(_bench_one, tasks)

    for outcome in outcomes:
        name = Path(outcome["dir"]).name
        if outcome["error"] is not None:
            if cfg.results_in is None:
                rows.append(_standalone_row(name, None, outcome["error"]))
            log(f"{name}: unreadable ({outcome['error']})")
            continue
        meta = outcome["meta"]
        key = (meta.get("generator"), meta.get("sample_index"))
        if key in by_key:
            target = by_key[key]
        else:
            target = _standalone_row(name, meta, None)
            rows.append(target)
            by_key[key] = target
        target["scores"].update(outcome["scores"])
        for model, err in outcome["model_errors"].items():
            target["status"] = "failed"
            target["reason"] = f"{model}: {err}"
            log(f"{name}: {model} failed ({err})")
        if outcome["scores"]:
            summary = " ".join(f"{m}={v:.3f}" for m, v in outcome["scores"].items())
            log(f"{name}: {summary}")

    if cfg.workers > 1:
        pool.shutdown()
    _write_results(cfg.out_path, header, rows)
    return rows
