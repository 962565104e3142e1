"""Shared test helpers: random instances and naive reference implementations."""

import random
from itertools import combinations

from stepkit.hypergraph import Hypergraph


def random_hypergraph(k: int, n: int, p: float, rng: random.Random) -> Hypergraph:
    edges = [e for e in combinations(range(n), k) if rng.random() < p]
    return Hypergraph(k, n, tuple(edges))


def alpha_by_enumeration(h: Hypergraph) -> int:
    """Reference independence number: scan all 2^n subsets."""
    masks = h.edge_masks()
    best = 0
    for sub in range(2 ** h.n):
        if any(sub & e == e for e in masks):
            continue
        count = sub.bit_count()
        if count > best:
            best = count
    return best


def naive_delta(a: int, b: int) -> int:
    """Reference highest differing bit: scan levels from above."""
    best = None
    for level in range(70):
        if (a >> level) != (b >> level):
            best = level
    return best
