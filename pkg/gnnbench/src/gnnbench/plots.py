"""Figure rendering from the toolkit's kde.csv / curves.csv exports."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

GENERATOR_COLORS = {"sbm": "tab:blue", "cabam": "tab:orange", "lfr": "tab:green"}


class PlotInputError(RuntimeError):
    """Malformed CSV input."""


def _read_kde_csv(path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["x", "density"]:
            raise PlotInputError(f"{path}: expected header x,density")
        rows = [(float(x), float(y)) for x, y in reader]
    if not rows:
        raise PlotInputError(f"{path}: no data rows")
    arr = np.array(rows)
    return arr[:, 0], arr[:, 1]


def _kde_label(path) -> str:
    # run_figure2.py writes kde_<metric>_<generator>.csv
    stem = Path(path).stem
    return stem.split("_")[-1] if "_" in stem else stem


def plot_kde(csv_paths, out_path, title: str | None = None) -> Path:
    """One labeled density curve per input CSV."""
    fig, ax = plt.subplots(figsize=(5, 3.2))
    for path in csv_paths:
        x, density = _read_kde_csv(path)
        label = _kde_label(path)
        ax.plot(x, density, label=label, color=GENERATOR_COLORS.get(label))
    ax.set_xlabel(title or "value")
    ax.set_ylabel("density")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return Path(out_path)


def read_curves_csv(path) -> dict[str, list[tuple[float, float | None, int]]]:
    """curves.csv -> generator -> [(bucket_center, mean_auc | None, count)]."""
    series: dict[str, list[tuple[float, float | None, int]]] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["generator", "bucket_center", "mean_auc", "count"]:
            raise PlotInputError(f"{path}: expected curves.csv header")
        for gen, center, mean_auc, count in reader:
            series.setdefault(gen, []).append(
                (float(center), float(mean_auc) if mean_auc else None, int(count))
            )
    if not series:
        raise PlotInputError(f"{path}: no data rows")
    return series


def _plot_series(ax, series) -> None:
    for gen, triples in series.items():
        xs = [c for c, _, _ in triples]
        ys = [np.nan if mean is None else mean for _, mean, _ in triples]
        ax.plot(xs, ys, marker="o", markersize=3, label=gen,
                color=GENERATOR_COLORS.get(gen))  # NaN rows render as gaps


def plot_curves(curves_csv, out_path, title: str | None = None) -> Path:
    """Per-generator mean-AUC series; empty buckets break the line."""
    series = read_curves_csv(curves_csv)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    _plot_series(ax, series)
    ax.set_xlabel(title or "metric bucket")
    ax.set_ylabel("mean ROC-AUC (OvR)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return Path(out_path)


def plot_model_groups(model_csvs: dict[str, str], groups: dict[str, list[str]], out_path) -> Path:
    """Two-column grouped panels (one row per model, one column per group).

    ``model_csvs`` maps model name -> its curves.csv; ``groups`` maps a
    column title (e.g. "sensitive") -> list of model names.
    """
    names = list(groups)
    depth = max(len(models) for models in groups.values())
    fig, axes = plt.subplots(depth, len(names), figsize=(4.6 * len(names), 2.6 * depth),
                             squeeze=False)
    for col, group_name in enumerate(names):
        for row in range(depth):
            ax = axes[row][col]
            if row >= len(groups[group_name]):
                ax.axis("off")
                continue
            model = groups[group_name][row]
            _plot_series(ax, read_curves_csv(model_csvs[model]))
            ax.set_title(f"{model} ({group_name})", fontsize=9)
            ax.set_ylabel("AUC")
            if row == 0 and col == 0:
                ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return Path(out_path)
