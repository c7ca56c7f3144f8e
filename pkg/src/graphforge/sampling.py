"""Shared sampling primitives used by all three generators."""

from __future__ import annotations

import numpy as np

from .errors import InvalidParams


def truncated_powerlaw(
    rng: np.random.Generator, exponent: float, low: float, high: float, size: int
) -> np.ndarray:
    """Inverse-CDF samples from density proportional to x^(-exponent) on [low, high].

    The bounded support keeps the density proper for every exponent,
    including exponents <= 1 where the unbounded law is non-normalizable.
    """
    if not 0 < low <= high:
        raise InvalidParams("power-law support must satisfy 0 < low <= high")
    if low == high:
        return np.full(size, float(low))
    u = rng.random(size)
    if abs(exponent - 1.0) < 1e-9:
        return low * (high / low) ** u
    e = 1.0 - exponent
    return (low**e + u * (high**e - low**e)) ** (1.0 / e)


def truncated_powerlaw_mean(exponent: float, low: float, high: float) -> float:
    """Analytic mean of the truncated continuous power law on [low, high]."""
    if low == high:
        return float(low)
    if abs(exponent - 1.0) < 1e-9:
        return (high - low) / np.log(high / low)
    if abs(exponent - 2.0) < 1e-9:
        return np.log(high / low) / (1.0 / low - 1.0 / high)
    num = (high ** (2.0 - exponent) - low ** (2.0 - exponent)) / (2.0 - exponent)
    den = (high ** (1.0 - exponent) - low ** (1.0 - exponent)) / (1.0 - exponent)
    return num / den


def sample_community_sizes(n: int, k: int, slope: float, rng=None) -> np.ndarray:
    """k positive community sizes summing to n, nondecreasing in the index.

    Sizes come from weights w_i = 1 + slope*i normalized to n, rounded by
    largest remainder, with a floor of one node per community enforced by
    stealing from the largest.  slope=0 gives maximally equal sizes.  The
    procedure is deterministic; ``rng`` is accepted for interface
    uniformity with the other samplers.
    """
    if k < 1:
        raise InvalidParams("community count must be >= 1")
    if k > n:
        raise InvalidParams("community count cannot exceed node count")
    if not 0.0 <= slope <= 1.0:
        raise InvalidParams("cluster size slope must be in [0, 1]")
    weights = 1.0 + slope * np.arange(k)
    quota = n * weights / weights.sum()
    sizes = np.floor(quota).astype(np.int64)
    remainder = quota - sizes
    deficit = int(n - sizes.sum())
    # Ties go to the higher index so the result stays nondecreasing.
    order = np.lexsort((-np.arange(k), -remainder))
    sizes[order[:deficit]] += 1
    # The largest entry is >= 2 whenever a zero exists (sum is n >= k),
    # so each steal removes one zero and the loop terminates.
    while sizes.min() == 0:
        sizes[int(np.argmax(sizes))] -= 1
        sizes[int(np.argmin(sizes))] += 1
    sizes = np.sort(sizes)
    assert sizes.sum() == n
    return sizes


def sample_degree_propensities(
    n: int, exponent: float, min_degree: int, avg_degree: float, rng: np.random.Generator
) -> np.ndarray:
    """Power-law degree propensities rescaled to a target mean.

    Draws from the power law truncated to [min_degree, n-1], then rescales
    so the sample mean equals ``avg_degree`` exactly.
    """
    if n < 1:
        raise InvalidParams("need at least one node")
    if min_degree < 1:
        raise InvalidParams("min_degree must be >= 1")
    if avg_degree < min_degree:
        raise InvalidParams("avg_degree must be >= min_degree")
    high = float(max(min_degree, n - 1))
    theta = truncated_powerlaw(rng, exponent, float(min_degree), high, n)
    return theta * (avg_degree / theta.mean())
