"""Stepping-up: build k-graphs on {0..2^N-1} from (k-1)-graphs on {0..N-1}.

An edge of the stepped-up graph is a k-subset of {0..2^N-1} that either has
an increasing binary structure whose level set is an edge of the first
source graph, or a decreasing structure whose reflected level set is an edge
of the second, or matches one of the given structure types.  Both an oracle
predicate and an optional materialized edge list are provided; they agree
wherever both exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .binary_structure import (
    BOTH,
    DECREASING,
    INCREASING,
    binary_structure,
    classify_monotone,
    level_set,
)
from .hypergraph import BudgetExhausted, Hypergraph
from .structure_types import (
    TypeTree,
    is_monotone_type,
    make_tab,
    shape_matches,
    shape_of,
    type_size,
    validate_type,
)


def left_step_edge(e: Iterable[int], g1: Hypergraph) -> bool:
    """Edge of the left stepping-up: increasing structure with level set in g1."""
    s = tuple(sorted(set(e)))
    kind = classify_monotone(binary_structure(s))
    if kind not in (INCREASING, BOTH):
        return False
    levels = tuple(sorted(level_set(s)))
    return levels in g1.edge_set()


def right_step_edge(e: Iterable[int], g2: Hypergraph, n_bits: Optional[int] = None) -> bool:
    """Edge of the right stepping-up: decreasing structure, reflected levels in g2.

    Levels are reflected by l -> n_bits-1-l; n_bits defaults to the vertex
    count of g2.
    """
    if n_bits is None:
        n_bits = g2.n
    s = tuple(sorted(set(e)))
    kind = classify_monotone(binary_structure(s))
    if kind not in (DECREASING, BOTH):
        return False
    levels = tuple(sorted(n_bits - 1 - l for l in level_set(s)))
    return levels in g2.edge_set()


@dataclass(frozen=True)
class SteppedUpGraph:
    """Stepping-up of (g1, g2, types) over the universe {0..2^n_bits - 1}."""

    n_bits: int
    k: int
    g1: Hypergraph
    g2: Hypergraph
    types: tuple[TypeTree, ...]
    edges: Optional[Hypergraph] = None

    @property
    def universe_size(self) -> int:
        return 2 ** self.n_bits

    def contains(self, e: Iterable[int]) -> bool:
        s = tuple(sorted(set(e)))
        if len(s) != self.k:
            raise ValueError(f"edge must have {self.k} distinct vertices, got {s}")
        if s[-1] >= self.universe_size:
            raise ValueError(f"edge {s} out of universe of size {self.universe_size}")
        if left_step_edge(s, self.g1) or right_step_edge(s, self.g2, self.n_bits):
            return True
        shape = shape_of(s)
        return any(shape_matches(shape, t) for t in self.types)


def step_up(
    g1: Hypergraph,
    g2: Hypergraph,
    types: Iterable[TypeTree],
    n_bits: Optional[int] = None,
    materialize: bool = False,
    max_candidates: int = 10_000_000,
) -> SteppedUpGraph:
    """Assemble the stepping-up of (g1, g2, types).

    Materialization enumerates all k-subsets of the universe and is guarded
    by max_candidates.  When every type in the family is non-monotone the
    three edge sources are pairwise disjoint, which is asserted during
    materialization.
    """
    if g1.k != g2.k:
        raise ValueError(f"source graphs must share uniformity, got {g1.k} and {g2.k}")
    if n_bits is None:
        n_bits = g1.n
    if g1.n != n_bits or g2.n != n_bits:
        raise ValueError("source graphs must live on {0..n_bits-1}")
    k = g1.k + 1
    types = tuple(types)
    for t in types:
        validate_type(t)
        if type_size(t) != k:
            raise ValueError(f"type {t} has size {type_size(t)}, expected {k}")
    graph = SteppedUpGraph(n_bits, k, g1, g2, types)
    if not materialize:
        return graph

    total = comb(2 ** n_bits, k)
    if total > max_candidates:
        raise BudgetExhausted(
            f"materializing would scan {total} candidate edges (cap {max_candidates})"
        )
    all_nonmonotone = all(not is_monotone_type(t) for t in types)
    edges = []
    for cand in combinations(range(2 ** n_bits), k):
        is_left = left_step_edge(cand, g1)
        is_right = right_step_edge(cand, g2, n_bits)
        shape = shape_of(cand)
        is_type = any(shape_matches(shape, t) for t in types)
        if is_left or is_right or is_type:
            edges.append(cand)
            assert not (is_left and is_right)
            if all_nonmonotone:
                assert not (is_type and (is_left or is_right))
    hg = Hypergraph(k, 2 ** n_bits, tuple(edges))
    return SteppedUpGraph(n_bits, k, g1, g2, types, hg)


def prop_step_up(g: Hypergraph, k: int, materialize: bool = False) -> SteppedUpGraph:
    """Step up (g, g, {T_{2,k-2}, T_{k-2,2}}) on the vertex count of g.

    Both family members are non-monotone only from k >= 4 onward, so smaller
    uniformities are rejected.
    """
    if k < 4:
        raise ValueError(f"uniformity must be at least 4, got {k}")
    if g.k != k - 1:
        raise ValueError(f"source graph must be {k - 1}-uniform, got {g.k}")
    family = (make_tab(2, k - 2), make_tab(k - 2, 2))
    # (2,2) appears twice when k = 4; deduplicate
    family = tuple(dict.fromkeys(family))
    return step_up(g, g, family, n_bits=g.n, materialize=materialize)
