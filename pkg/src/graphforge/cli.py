"""Command-line surface.

Exit codes: 0 success, 2 invalid config or missing input, 3 generation
failed, 4 degenerate metric.  GRAPHFORGE_SEED overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import yaml

from .baselines import ppr_classifier, roc_auc_ovr
from .config import (
    GENERATORS,
    SweepConfig,
    build_generator_params,
    build_sweep_config,
    load_config,
)
from .errors import (
    DegenerateSample,
    GenerationFailed,
    GraphForgeError,
    InfeasibleParams,
    InfeasibleSplit,
    InvalidParams,
    InvalidQuery,
    UndefinedAuc,
)
from .harness import (
    build_dataset,
    kde,
    metric_values,
    performance_curves,
    run_sweep,
    sweep_tasks,
)
from .metrics import GraphMetrics, compute_all
from .storage import (
    ResultsWriter,
    load_bundle,
    read_results,
    write_bundle,
    write_curves_csv,
    write_kde_csv,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GENERATION = 3
EXIT_DEGENERATE = 4


def _resolve_seed(arg_seed: int | None) -> int:
    env = os.environ.get("GRAPHFORGE_SEED")
    if env is not None:
        return int(env)
    if arg_seed is None:
        raise InvalidParams("a seed is required (--seed or GRAPHFORGE_SEED)")
    return arg_seed


def _cmd_generate(args) -> int:
    seed = _resolve_seed(args.seed)
    cfg = load_config(args.config)
    params, feature = build_generator_params(args.generator, cfg)
    sweep_cfg = SweepConfig(
        generators=(args.generator,),
        samples_per_generator=1,
        master_seed=seed,
    )
    try:
        dataset, _ = build_dataset(sweep_cfg, args.generator, params, feature, 0)
    except InfeasibleSplit as exc:
        raise InvalidParams(str(exc)) from exc
    write_bundle(dataset, args.out)
    print(f"wrote dataset bundle to {args.out}")
    return EXIT_OK


def _completed_tasks(out_path: Path, cfg) -> set[tuple[str, int]]:
    """Rows already present in a partially written results file."""
    header, rows = read_results(out_path, allow_partial=True)
    if header.get("master_seed") != cfg.master_seed or header.get("config_digest") != cfg.digest():
        raise InvalidParams(
            "existing results file does not match this sweep config; "
            "refusing to resume"
        )
    done = {(r.generator, r.sample_index) for r in rows}
    # Keep only the ordered prefix so the final file is byte-identical to
    # an uninterrupted run.
    prefix: set[tuple[str, int]] = set()
    for task in sweep_tasks(cfg):
        if task in done:
            prefix.add(task)
        else:
            break
    return prefix


def _truncate_to_rows(out_path: Path, cfg, keep: set[tuple[str, int]]) -> None:
    header_line = None
    kept_lines = []
    with open(out_path) as fh:
        for i, line in enumerate(fh):
            if i == 0:
                header_line = line.rstrip("\n")
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                break
            if (obj["generator"], obj["sample_index"]) in keep:
                kept_lines.append(line.rstrip("\n"))
    with open(out_path, "w", newline="\n") as fh:
        fh.write(header_line + "\n")
        for line in kept_lines:
            fh.write(line + "\n")


def _cmd_sweep(args) -> int:
    cfg = build_sweep_config(load_config(args.config))
    out_path = Path(args.out)
    datasets_dir = args.datasets_dir
    if cfg.export_datasets and datasets_dir is None:
        datasets_dir = str(out_path.with_suffix("")) + "_datasets"

    skip: set[tuple[str, int]] = set()
    if out_path.exists():
        skip = _completed_tasks(out_path, cfg)
        _truncate_to_rows(out_path, cfg, skip)
    total = len(sweep_tasks(cfg))
    if len(skip) == total:
        print(f"{out_path} already complete ({total} rows)")
        return EXIT_OK

    failed = 0
    with ResultsWriter(out_path, cfg.master_seed, cfg.digest(), append=bool(skip)) as writer:
        written = len(skip)
        for row in run_sweep(cfg, workers=args.workers, datasets_dir=datasets_dir, skip=skip):
            writer.write_row(row)
            written += 1
            failed += row.status == "failed"
    # Both counts matter: failed generations are rows too.
    print(f"wrote {written} rows to {out_path} ({written - failed} ok, {failed} failed)")
    return EXIT_OK


def _metrics_to_printable(m: GraphMetrics) -> dict:
    obj = {name: getattr(m, name) for name in GraphMetrics.METRIC_NAMES}
    obj["degenerate"] = dict(m.degenerate)
    return obj


def _cmd_metrics(args) -> int:
    dataset = load_bundle(args.dataset)
    metrics = compute_all(dataset.graph, dataset.communities)
    print(json.dumps(_metrics_to_printable(metrics), indent=1))
    return EXIT_OK


def _cmd_bench_ppr(args) -> int:
    dataset = load_bundle(args.dataset)
    scores = ppr_classifier(dataset, damping=args.damping)
    auc = roc_auc_ovr(scores, dataset.communities, dataset.split.test)
    print(json.dumps({"model": "ppr", "auc": auc}, indent=1))
    return EXIT_OK


def _cmd_kde(args) -> int:
    _, rows = read_results(args.input)
    values = metric_values(rows, args.metric)
    curve = kde(values, metric=args.metric)
    write_kde_csv(args.out, curve.grid, curve.density)
    print(f"wrote kde for {args.metric} ({len(values)} values, "
          f"bandwidth {curve.bandwidth:.6g}) to {args.out}")
    return EXIT_OK


def _cmd_curves(args) -> int:
    _, rows = read_results(args.input)
    table = performance_curves(rows, args.metric, args.model, buckets=args.buckets)
    write_curves_csv(args.out, table)
    print(f"wrote {len(table)} curve rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphforge",
        description="Synthetic graph-dataset generation and benchmarking toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate one dataset bundle")
    p.add_argument("--generator", required=True, choices=GENERATORS)
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("sweep", help="run a parameter sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--datasets-dir", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("metrics", help="compute the six statistics for a bundle")
    p.add_argument("--dataset", required=True)
    p.set_defaults(fn=_cmd_metrics)

    p = sub.add_parser("bench-ppr", help="score the PPR baseline on a bundle")
    p.add_argument("--dataset", required=True)
    p.add_argument("--damping", type=float, default=0.85)
    p.set_defaults(fn=_cmd_bench_ppr)

    p = sub.add_parser("kde", help="kernel density estimate of a results column")
    p.add_argument("--input", required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_kde)

    p = sub.add_parser("curves", help="bucketed model-performance curves")
    p.add_argument("--input", required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--buckets", type=int, default=20)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_curves)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DegenerateSample,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (
        InvalidParams,
        InfeasibleParams,
        InvalidQuery,
        InfeasibleSplit,
        UndefinedAuc,
        FileNotFoundError,
        json.JSONDecodeError,
        yaml.YAMLError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GraphForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
