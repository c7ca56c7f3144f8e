"""Deterministic stream derivation.

Every sampling stage owns an independent PCG64 stream keyed by
(master_seed, stage_tag, sample_index).  Results therefore never depend
on execution order, worker count, or which optional stages are enabled.
"""

import hashlib

import numpy as np


def _digest64(text: str) -> int:
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "little")


def stage_seed(master_seed: int, tag: str, index: int = 0) -> int:
    """Stable 63-bit integer seed for stage ``tag`` of sample ``index``."""
    return _digest64(f"{master_seed}:{tag}:{index}") >> 1


def child_rng(master_seed: int, tag: str, index: int = 0) -> np.random.Generator:
    """Independent generator for one (stage, sample) pair."""
    if master_seed < 0:
        raise ValueError("master seed must be nonnegative")
    if index < 0:
        raise ValueError("sample index must be nonnegative")
    ss = np.random.SeedSequence([master_seed, _digest64(tag), index])
    return np.random.Generator(np.random.PCG64(ss))
