import numpy as np
import pytest

from graphforge import (
    CommunityAssignment,
    FeatureParams,
    InfeasibleSplit,
    child_rng,
    generate_features,
    make_split,
)


def two_classes(n=2048):
    labels = np.repeat([0, 1], n // 2)
    return CommunityAssignment.from_labels(labels, 2)


def nearest_class_mean_accuracy(feats, labels, train_mask):
    """Held-out accuracy of classifying by the closest per-class train mean."""
    classes = np.unique(labels)
    means = np.stack([feats[train_mask & (labels == c)].mean(axis=0) for c in classes])
    held = ~train_mask
    dists = ((feats[held, None, :] - means[None, :, :]) ** 2).sum(axis=2)
    pred = classes[np.argmin(dists, axis=1)]
    return (pred == labels[held]).mean()


class TestGenerateFeatures:
    def test_zero_center_distance_collapses_centers(self):
        c = two_classes(2048)
        feats = generate_features(c, FeatureParams(center_distance=0.0, dim=16), child_rng(0, "f"))
        for label in range(2):
            class_mean = feats[c.labels == label].mean(axis=0)
            assert np.linalg.norm(class_mean) < 0.2

    def test_feature_dim(self):
        c = two_classes(64)
        feats = generate_features(c, FeatureParams(center_distance=1.0, dim=16), child_rng(0, "f"))
        assert feats.shape == (64, 16)

    def test_deterministic(self):
        c = two_classes(64)
        fp = FeatureParams(center_distance=1.0, dim=8)
        a = generate_features(c, fp, child_rng(3, "f"))
        b = generate_features(c, fp, child_rng(3, "f"))
        assert np.array_equal(a, b)

    def test_informative_when_centers_far(self):
        c = two_classes(2048)
        feats = generate_features(c, FeatureParams(center_distance=2.0, dim=16), child_rng(1, "f"))
        train = np.zeros(2048, dtype=bool)
        train[:10] = True
        train[1024 : 1024 + 10] = True
        assert nearest_class_mean_accuracy(feats, c.labels, train) > 0.95

    def test_chance_when_centers_collapse(self):
        c = two_classes(2048)
        feats = generate_features(c, FeatureParams(center_distance=0.0, dim=16), child_rng(1, "f"))
        train = np.zeros(2048, dtype=bool)
        train[:10] = True
        train[1024 : 1024 + 10] = True
        assert nearest_class_mean_accuracy(feats, c.labels, train) <= 0.55


class TestMakeSplit:
    def test_counts_and_disjointness(self):
        labels = np.repeat([0, 1, 2], 50)
        c = CommunityAssignment.from_labels(labels, 3)
        split = make_split(c, 10, 10, child_rng(0, "s"))
        assert len(split.train) == 30
        assert len(split.val) == 30
        assert len(split.test) == 150 - 60

    def test_union_covers_every_node_exactly_once(self):
        labels = np.repeat([0, 1], [40, 60])
        c = CommunityAssignment.from_labels(labels, 2)
        split = make_split(c, 5, 3, child_rng(1, "s"))
        union = np.concatenate([split.train, split.val, split.test])
        assert sorted(union.tolist()) == list(range(100))

    def test_train_balanced_per_class(self):
        labels = np.repeat([0, 1], [40, 60])
        c = CommunityAssignment.from_labels(labels, 2)
        split = make_split(c, 7, 2, child_rng(2, "s"))
        assert (c.labels[split.train] == 0).sum() == 7
        assert (c.labels[split.train] == 1).sum() == 7

    def test_small_community_rejected(self):
        labels = np.array([0] * 5 + [1] * 50)
        c = CommunityAssignment.from_labels(labels, 2)
        with pytest.raises(InfeasibleSplit):
            make_split(c, 10, 10, child_rng(0, "s"))

    def test_deterministic(self):
        labels = np.repeat([0, 1], 64)
        c = CommunityAssignment.from_labels(labels, 2)
        a = make_split(c, 10, 10, child_rng(9, "s"))
        b = make_split(c, 10, 10, child_rng(9, "s"))
        assert np.array_equal(a.train, b.train) and np.array_equal(a.val, b.val)
