"""LFR benchmark generator: power-law degrees and community sizes with a
homophily mixing parameter."""

from __future__ import annotations

import numpy as np

from .errors import GenerationFailed, InvalidParams
from .graph import CommunityAssignment, Graph
from .params import LfrParams
from .sampling import truncated_powerlaw, truncated_powerlaw_mean

_REWIRE_ATTEMPTS = 50


class _AttemptFailed(Exception):
    """One simulation attempt failed; the caller may retry."""


def _solve_min_degree(exponent: float, avg_degree: float, d_max: int) -> float:
    """Smallest degree bound so the truncated power-law mean hits avg_degree.

    The truncated mean is increasing in the lower bound, so plain
    bisection on [1, d_max] suffices.
    """
    lo, hi = 1.0, float(d_max)
    if truncated_powerlaw_mean(exponent, lo, float(d_max)) > avg_degree:
        raise InvalidParams(
            f"avg_degree {avg_degree} is below the minimum achievable mean "
            f"for exponent {exponent} with degree cap {d_max}"
        )
    if avg_degree > d_max:
        raise InvalidParams(f"avg_degree {avg_degree} exceeds the degree cap {d_max}")
    for _ in range(100):
        mid = (lo + hi) / 2.0
        if truncated_powerlaw_mean(exponent, mid, float(d_max)) < avg_degree:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _draw_community_sizes(
    rng: np.random.Generator, tau2: float, min_size: int, max_size: int, n: int
) -> np.ndarray:
    """Sizes from the truncated power law, drawn until they cover n, then
    adjusted to sum to n exactly."""
    sizes: list[int] = []
    total = 0
    while total < n:
        s = int(round(truncated_powerlaw(rng, tau2, float(min_size), float(max_size), 1)[0]))
        s = min(max(s, min_size), max_size)
        sizes.append(s)
        total += s
    excess = total - n
    if excess > 0:
        if sizes[-1] - excess >= min_size:
            sizes[-1] -= excess
        else:
            # Dropping the undersized trim and topping up earlier
            # communities keeps every size within [min_size, max_size].
            sizes.pop()
            need = n - sum(sizes)
            if not sizes:
                sizes = [need]
            idx = 0
            stuck = 0
            while need > 0:
                if sizes[idx] < max_size:
                    sizes[idx] += 1
                    need -= 1
                    stuck = 0
                else:
                    stuck += 1
                    if stuck >= len(sizes):
                        raise _AttemptFailed("no slack to absorb the size remainder")
                idx = (idx + 1) % len(sizes)
    return np.asarray(sizes, dtype=np.int64)


def _assign_communities(
    rng: np.random.Generator, sizes: np.ndarray, internal: np.ndarray
) -> np.ndarray:
    """Place every node in a community large enough for its internal degree.

    Iterates with random reassignment: an over-full community evicts a
    uniformly random member.  Fails after 10n placement steps.
    """
    n = len(internal)
    num_comms = len(sizes)
    membership = np.full(n, -1, dtype=np.int64)
    members: list[list[int]] = [[] for _ in range(num_comms)]
    free = list(rng.permutation(n))
    cap = 10 * n
    steps = 0
    while free:
        steps += 1
        if steps > cap:
            raise _AttemptFailed("community assignment did not converge")
        v = int(free.pop())
        feasible = np.flatnonzero(sizes > internal[v])
        if len(feasible) == 0:
            raise _AttemptFailed(
                f"no community can host internal degree {int(internal[v])}"
            )
        c = int(feasible[rng.integers(len(feasible))])
        membership[v] = c
        members[c].append(v)
        if len(members[c]) > sizes[c]:
            evicted = members[c].pop(int(rng.integers(len(members[c]))))
            membership[evicted] = -1
            free.append(evicted)
    return membership


def _repair_pairs(rng, pairs, edge_set, valid_fn) -> tuple[list, int]:
    """Split stub pairs into valid edges and violations, then fix
    violations by degree-preserving double swaps against valid edges.
    Unfixable pairs are dropped and counted."""
    good: list[tuple[int, int]] = []
    bad: list[tuple[int, int]] = []
    for u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if u != v and key not in edge_set and valid_fn(u, v):
            edge_set.add(key)
            good.append((u, v))
        else:
            bad.append((u, v))
    dropped = 0
    for u, v in bad:
        fixed = False
        for _ in range(_REWIRE_ATTEMPTS):
            if not good:
                break
            j = int(rng.integers(len(good)))
            x, y = good[j]
            if rng.random() < 0.5:
                x, y = y, x
            if u == x or v == y:
                continue
            e1 = (u, x) if u < x else (x, u)
            e2 = (v, y) if v < y else (y, v)
            if e1 == e2 or e1 in edge_set or e2 in edge_set:
                continue
            if not (valid_fn(u, x) and valid_fn(v, y)):
                continue
            old = (x, y) if x < y else (y, x)
            edge_set.discard(old)
            edge_set.add(e1)
            edge_set.add(e2)
            good[j] = (u, x)
            good.append((v, y))
            fixed = True
            break
        if not fixed:
            dropped += 1
    return good, dropped


def _pair_stubs(rng: np.random.Generator, stubs: np.ndarray) -> np.ndarray:
    rng.shuffle(stubs)
    return stubs.reshape(-1, 2)


def _attempt(params: LfrParams, rng, d_min: float, d_max: int,
             min_size: int, max_size: int) -> tuple[Graph, CommunityAssignment, dict]:
    n, mu = params.nvertex, params.mixing_param
    degrees = np.rint(
        truncated_powerlaw(rng, params.degree_exponent, d_min, float(d_max), n)
    ).astype(np.int64)
    degrees = np.clip(degrees, 1, d_max)

    sizes = _draw_community_sizes(rng, params.community_exponent, min_size, max_size, n)
    internal = np.rint((1.0 - mu) * degrees).astype(np.int64)
    if internal.max() >= sizes.max():
        raise _AttemptFailed(
            f"largest internal degree {int(internal.max())} exceeds every community"
        )
    membership = _assign_communities(rng, sizes, internal)

    edge_set: set[tuple[int, int]] = set()
    dropped = 0
    # Intra-community configuration model, one community at a time.
    for c in range(len(sizes)):
        nodes = np.flatnonzero(membership == c)
        if internal[nodes].sum() % 2 == 1:
            cands = nodes[internal[nodes] > 0]
            internal[cands[rng.integers(len(cands))]] -= 1
        stubs = np.repeat(nodes, internal[nodes])
        if len(stubs) == 0:
            continue
        pairs = _pair_stubs(rng, stubs)
        _, bad = _repair_pairs(rng, pairs, edge_set, lambda a, b: True)
        dropped += bad

    # Inter-community wiring of the residual degree.
    external = degrees - internal
    if external.sum() % 2 == 1:
        cands = np.flatnonzero(external > 0)
        external[cands[rng.integers(len(cands))]] -= 1
    stubs = np.repeat(np.arange(n), external)
    if len(stubs):
        pairs = _pair_stubs(rng, stubs)
        _, bad = _repair_pairs(
            rng, pairs, edge_set, lambda a, b: membership[a] != membership[b]
        )
        dropped += bad

    edges = np.array(sorted(edge_set), dtype=np.int64).reshape(-1, 2)
    graph = Graph.from_edges(n, edges)
    assign = CommunityAssignment.from_labels(membership, len(sizes))
    info = {"edges_dropped": int(dropped), "num_communities": int(len(sizes))}
    return graph, assign, info


def generate_lfr(
    params: LfrParams, rng: np.random.Generator
) -> tuple[Graph, CommunityAssignment, dict]:
    """Generate one LFR benchmark graph with its community assignment.

    Degrees follow the degree_exponent power law truncated to
    [d_min, d_max], with d_min solved so the mean matches avg_degree and
    d_max = max_degree_proportion percent of n.  Community sizes follow
    the community_exponent power law within the proportion bounds.  Each
    node keeps round((1 - mu) * degree) edges inside its community; the
    whole construction is retried up to num_tries times.
    """
    params.validate()
    n = params.nvertex
    d_max = int(round(params.max_degree_proportion / 100.0 * n))
    d_max = min(max(d_max, 1), n - 1)
    d_min = _solve_min_degree(params.degree_exponent, params.avg_degree, d_max)
    min_size = max(1, int(round(params.min_community_proportion * n)))
    max_size = min(n, max(min_size, int(round(params.max_community_proportion * n))))

    last = "no attempts made"
    for attempt in range(1, params.num_tries + 1):
        try:
            graph, assign, info = _attempt(params, rng, d_min, d_max, min_size, max_size)
            info["tries_used"] = attempt
            return graph, assign, info
        except _AttemptFailed as exc:
            last = str(exc)
    raise GenerationFailed(
        f"LFR generation failed after {params.num_tries} tries ({last})"
    )
