from pathlib import Path

import pytest

from gnnbench.plots import (
    PlotInputError,
    plot_curves,
    plot_kde,
    plot_model_groups,
    read_curves_csv,
)


def write_kde(path: Path, offset: float = 0.0):
    rows = ["x,density"] + [f"{x / 10 + offset},{0.1 + 0.01 * x}" for x in range(20)]
    path.write_text("\n".join(rows) + "\n")
    return path


def write_curves(path: Path, with_gaps: bool = False):
    lines = ["generator,bucket_center,mean_auc,count"]
    for gen in ("sbm", "cabam", "lfr"):
        for b in range(5):
            if with_gaps and b == 2:
                lines.append(f"{gen},{b / 5},,0")
            else:
                lines.append(f"{gen},{b / 5},{0.6 + 0.05 * b},{3}")
    path.write_text("\n".join(lines) + "\n")
    return path


class TestKdePlot:
    def test_three_generator_overlay(self, tmp_path):
        inputs = [
            write_kde(tmp_path / f"kde_m_{gen}.csv", off)
            for gen, off in (("sbm", 0.0), ("cabam", 0.4), ("lfr", 0.9))
        ]
        out = plot_kde(inputs, tmp_path / "fig.png", title="m")
        assert out.exists() and out.stat().st_size > 0

    def test_malformed_header_rejected(self, tmp_path):
        bad = tmp_path / "kde.csv"
        bad.write_text("a,b\n1,2\n")
        with pytest.raises(PlotInputError):
            plot_kde([bad], tmp_path / "fig.png")


class TestCurvesPlot:
    def test_renders(self, tmp_path):
        csv = write_curves(tmp_path / "curves.csv")
        out = plot_curves(csv, tmp_path / "fig.png")
        assert out.exists() and out.stat().st_size > 0

    def test_empty_buckets_parsed_as_gaps(self, tmp_path):
        csv = write_curves(tmp_path / "curves.csv", with_gaps=True)
        series = read_curves_csv(csv)
        assert series["sbm"][2][1] is None and series["sbm"][2][2] == 0
        out = plot_curves(csv, tmp_path / "fig.png")
        assert out.exists()

    def test_group_panels(self, tmp_path):
        model_csvs = {
            name: str(write_curves(tmp_path / f"{name}.csv"))
            for name in ("gcn", "gat", "graphsage", "appnp")
        }
        out = plot_model_groups(
            model_csvs,
            {"sensitive": ["gcn", "gat"], "insensitive": ["graphsage", "appnp"]},
            tmp_path / "groups.png",
        )
        assert out.exists() and out.stat().st_size > 0
