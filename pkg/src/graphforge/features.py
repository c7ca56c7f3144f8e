"""Node-feature generation and train/val/test splitting."""

from __future__ import annotations

import numpy as np

from .errors import InfeasibleSplit
from .graph import CommunityAssignment, DataSplit, community_sizes
from .params import FeatureParams


def generate_features(
    c: CommunityAssignment, fp: FeatureParams, rng: np.random.Generator
) -> np.ndarray:
    """Community-conditioned Gaussian features, one n x dim matrix.

    Each community gets a center drawn from N(0, center_distance * I);
    each node is its community's center plus unit-variance noise.
    """
    fp.validate()
    centers = rng.normal(0.0, np.sqrt(fp.center_distance), size=(c.k, fp.dim))
    return centers[c.labels] + rng.normal(0.0, 1.0, size=(c.n, fp.dim))


def make_split(
    c: CommunityAssignment,
    per_class_train: int,
    per_class_val: int,
    rng: np.random.Generator,
) -> DataSplit:
    """Uniform per-class train/val sets; every remaining node is test.

    Every community must have at least per_class_train + per_class_val + 1
    nodes so the test set touches each class.
    """
    if per_class_train < 1 or per_class_val < 0:
        raise InfeasibleSplit("need at least one training node per class")
    need = per_class_train + per_class_val + 1
    sizes = community_sizes(c)
    if sizes.min() < need:
        raise InfeasibleSplit(
            f"community of size {int(sizes.min())} cannot supply "
            f"{per_class_train}+{per_class_val} labeled nodes plus one test node"
        )
    train, val = [], []
    for label in range(c.k):
        members = np.flatnonzero(c.labels == label)
        picked = rng.permutation(members)
        train.append(picked[:per_class_train])
        val.append(picked[per_class_train : per_class_train + per_class_val])
    train_idx = np.sort(np.concatenate(train))
    val_idx = np.sort(np.concatenate(val))
    rest = np.setdiff1d(np.arange(c.n), np.concatenate([train_idx, val_idx]))
    return DataSplit.from_indices(train_idx, val_idx, rest)
