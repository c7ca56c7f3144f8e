import pytest

from gnnbench import BundleError, load_bundle


class TestLoadBundle:
    def test_reads_generated_bundle(self, easy_bundle):
        b = load_bundle(easy_bundle)
        assert b.n == 1028
        assert b.features.shape == (1028, 16)
        assert b.num_classes == 4
        assert b.meta["generator"] == "sbm"
        assert len(b.train_idx) == 40  # 10 per class
        assert len(b.edges) > 0
        assert (b.edges[:, 0] < b.edges[:, 1]).all()

    def test_split_partitions_nodes(self, easy_bundle):
        b = load_bundle(easy_bundle)
        ids = set(b.train_idx) | set(b.val_idx) | set(b.test_idx)
        assert len(ids) == len(b.train_idx) + len(b.val_idx) + len(b.test_idx) == b.n

    def test_missing_directory(self, tmp_path):
        with pytest.raises(BundleError):
            load_bundle(tmp_path / "nothing")

    def test_corrupt_labels(self, easy_bundle, tmp_path):
        import shutil

        broken = tmp_path / "broken"
        shutil.copytree(easy_bundle, broken)
        (broken / "labels.csv").write_text("node_id,label\n0,not_an_int\n")
        with pytest.raises(BundleError):
            load_bundle(broken)
