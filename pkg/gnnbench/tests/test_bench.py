import json
import subprocess

import pytest

from gnnbench import BenchRunConfig, run_bench
from gnnbench.train import TrainConfig

from tests.conftest import GRAPHFORGE

FAST = TrainConfig(epochs=20, eval_every=10)


@pytest.fixture(scope="module")
def augmented(swept_results, tmp_path_factory):
    results, datasets = swept_results
    out = tmp_path_factory.mktemp("bench") / "augmented.jsonl"
    cfg = BenchRunConfig(
        dataset_glob=str(datasets / "*"),
        models=("mlp", "gcn"),
        out_path=str(out),
        results_in=str(results),
        train=FAST,
    )
    rows = run_bench(cfg, log=lambda *_: None)
    return results, out, rows


class TestBenchAugmentation:

    def test_row_count_preserved(self, augmented):
        results, out, rows = augmented
        before = len(results.read_text().splitlines()) - 1
        after = len(out.read_text().splitlines()) - 1
        assert before == after == len(rows) == 4

    def test_scores_added_to_existing_rows(self, augmented):
        _, out, _ = augmented
        lines = out.read_text().splitlines()[1:]
        for line in lines:
            obj = json.loads(line)
            assert set(obj["scores"]) >= {"ppr", "mlp", "gcn"}
            assert obj["metrics"] is not None  # carried over from the sweep

    def test_primary_loader_accepts_output(self, augmented, tmp_path):
        # the toolkit's own curves command must parse the augmented file
        _, out, _ = augmented
        proc = subprocess.run(
            GRAPHFORGE + ["curves", "--input", str(out), "--metric", "edge_homogeneity",
                          "--model", "gcn", "--buckets", "3",
                          "--out", str(tmp_path / "c.csv")],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        header = (tmp_path / "c.csv").read_text().splitlines()[0]
        assert header == "generator,bucket_center,mean_auc,count"

    def test_run_metadata_recorded(self, augmented):
        _, out, _ = augmented
        header = json.loads(out.read_text().splitlines()[0])
        assert header["bench"]["models"] == ["mlp", "gcn"]
        assert header["bench"]["epochs"] == 20


class TestBenchStandalone:
    def test_rows_built_from_bundles(self, swept_results, tmp_path):
        _, datasets = swept_results
        out = tmp_path / "standalone.jsonl"
        cfg = BenchRunConfig(
            dataset_glob=str(datasets / "sbm_*"),
            models=("mlp",),
            out_path=str(out),
            train=FAST,
        )
        rows = run_bench(cfg, log=lambda *_: None)
        assert len(rows) == 2
        assert all(r["status"] == "ok" and "mlp" in r["scores"] for r in rows)

    def test_unreadable_bundle_becomes_failed_row(self, swept_results, tmp_path):
        _, datasets = swept_results
        import shutil

        broken_root = tmp_path / "bundles"
        shutil.copytree(datasets, broken_root)
        (broken_root / "sbm_00000" / "edges.tsv").write_text("0\tnot_a_node\n")
        out = tmp_path / "standalone.jsonl"
        cfg = BenchRunConfig(
            dataset_glob=str(broken_root / "sbm_*"),
            models=("mlp",),
            out_path=str(out),
            train=FAST,
        )
        rows = run_bench(cfg, log=lambda *_: None)
        assert len(rows) == 2
        statuses = sorted(r["status"] for r in rows)
        assert statuses == ["failed", "ok"]

    def test_unknown_model_rejected(self, tmp_path):
        cfg = BenchRunConfig(
            dataset_glob=str(tmp_path / "*"), models=("sgc",), out_path=str(tmp_path / "o"),
        )
        with pytest.raises(ValueError):
            run_bench(cfg)
