"""gnnbench command line: train models over bundles, render figures."""

from __future__ import annotations

import argparse
import sys

from .bench import BenchRunConfig, run_bench
from .loader import BundleError
from .models import SUPPORTED_MODELS
from .plots import PlotInputError, plot_curves, plot_kde, plot_model_groups
from .train import TrainConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gnnbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="train models on exported dataset bundles")
    p.add_argument("--datasets", required=True, help="glob over bundle directories")
    p.add_argument("--models", default=",".join(SUPPORTED_MODELS),
                   help="comma-separated subset of: " + ", ".join(SUPPORTED_MODELS))
    p.add_argument("--results-in", default=None,
                   help="optional results.jsonl whose rows get the new scores")
    p.add_argument("--out", required=True)
    p.add_argument("--epochs", type=int, default=150)
    p.add_argument("--lr", type=float, default=0.01)
    p.add_argument("--hidden", type=int, default=32)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--quiet", action="store_true")

    k = sub.add_parser("plot-kde", help="overlayed density curves from kde CSVs")
    k.add_argument("--inputs", nargs="+", required=True)
    k.add_argument("--title", default=None)
    k.add_argument("--out", required=True)

    c = sub.add_parser("plot-curves", help="per-generator AUC curves from curves.csv")
    c.add_argument("--input", required=True)
    c.add_argument("--title", default=None)
    c.add_argument("--out", required=True)

    g = sub.add_parser("plot-groups", help="two-column sensitive/insensitive panels")
    g.add_argument("--model-csv", nargs="+", required=True, metavar="MODEL=CSV")
    g.add_argument("--sensitive", default="gcn,gat")
    g.add_argument("--insensitive", default="graphsage,appnp")
    g.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bench":
            cfg = BenchRunConfig(
                dataset_glob=args.datasets,
                models=tuple(m.strip() for m in args.models.split(",") if m.strip()),
                out_path=args.out,
                results_in=args.results_in,
                train=TrainConfig(epochs=args.epochs, lr=args.lr, hidden=args.hidden),
                workers=args.workers,
            )
            log = (lambda *_: None) if args.quiet else print
            rows = run_bench(cfg, log=log)
            print(f"wrote {len(rows)} rows to {args.out}")
        elif args.command == "plot-kde":
            out = plot_kde(args.inputs, args.out, title=args.title)
            print(f"wrote {out}")
        elif args.command == "plot-curves":
            out = plot_curves(args.input, args.out, title=args.title)
            print(f"wrote {out}")
        elif args.command == "plot-groups":
            model_csvs = dict(item.split("=", 1) for item in args.model_csv)
            groups = {
                "sensitive": [m for m in args.sensitive.split(",") if m],
                "insensitive": [m for m in args.insensitive.split(",") if m],
            }
            out = plot_model_groups(model_csvs, groups, args.out)
            print(f"wrote {out}")
        return 0
    except (BundleError, PlotInputError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
