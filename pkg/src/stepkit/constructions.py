"""Explicit hypergraphs: expansions, projective-plane line designs, and the
iterated doubling family.

The expansion of a hypergraph raises uniformity by one by granting each edge
a private new vertex.  Line designs over small prime fields give the
7-point and 13-point linear designs.  The doubling family starts from a
single 4-edge and repeatedly joins two copies with all 2+2 cross edges; its
independence number grows by exactly one per doubling step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class OrderedHypergraph:
    """Hypergraph plus a vertex ordering; order[rank] is the vertex at that rank."""

    hypergraph: Hypergraph
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(self.hypergraph.n)):
            raise ValueError("order must be a permutation of the vertex set")

    @property
    def n(self) -> int:
        return self.hypergraph.n

    def rank(self, v: int) -> int:
        return self.order.index(v)

    def ranks(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def expansion(h: Hypergraph) -> tuple[Hypergraph, dict[tuple[int, ...], int]]:
    """Add one fresh degree-1 vertex to every edge, raising uniformity by one.

    New vertices are numbered n, n+1, ... in edge order; the returned map
    sends each original edge to its new vertex.
    """
    new_vertex = {e: h.n + i for i, e in enumerate(h.edges)}
    edges = tuple(tuple(sorted(e + (new_vertex[e],))) for e in h.edges)
    return Hypergraph(h.k + 1, h.n + h.m, edges), new_vertex


def ordered_expansion(h: Hypergraph) -> OrderedHypergraph:
    """Expansion ordered with all new vertices first, then the old ones.

    Every new vertex is then the smallest vertex of its edge.
    """
    expanded, new_vertex = expansion(h)
    order = tuple(range(h.n, expanded.n)) + tuple(range(h.n))
    out = OrderedHypergraph(expanded, order)
    assert validate_expansion_order(out, new_vertex)
    return out


def validate_expansion_order(
    oh: OrderedHypergraph, new_vertex: dict[tuple[int, ...], int]
) -> bool:
    """Check that each edge's private vertex is the order-minimum of that edge."""
    ranks = oh.ranks()
    for base_edge, v in new_vertex.items():
        edge = tuple(sorted(base_edge + (v,)))
        if min(edge, key=ranks.__getitem__) != v:
            return False
    return True


def pg_lines(q: int) -> Hypergraph:
    """Line design of the projective plane over the q-element prime field.

    Points are 1-dimensional subspaces of F_q^3, named by their normalized
    representative (first non-zero coordinate 1) and numbered in
    lexicographic order of those representatives.  Lines are the
    2-dimensional subspaces, each meeting q+1 points.
    """
    if q not in (2, 3):
        raise ValueError(f"only q in {{2, 3}} is supported, got {q}")

    def normalize(vec: tuple[int, int, int]) -> tuple[int, int, int]:
        for coord in vec:
            if coord % q != 0:
                inv = pow(coord, q - 2, q)
                return tuple((x * inv) % q for x in vec)
        raise ValueError("zero vector has no direction")

    points = sorted({normalize(v) for v in product(range(q), repeat=3) if any(v)})
    index = {p: i for i, p in enumerate(points)}
    assert len(points) == q * q + q + 1

    lines = set()
    for normal in points:
        on_line = tuple(
            sorted(
                index[p]
                for p in points
                if sum(a * b for a, b in zip(p, normal)) % q == 0
            )
        )
        lines.add(on_line)
    assert len(lines) == q * q + q + 1
    return Hypergraph(q + 1, len(points), tuple(sorted(lines)))


def fano() -> Hypergraph:
    return pg_lines(2)


def doubling_graph(k: int, max_k: int = 5) -> Hypergraph:
    """k-th member of the doubling family on 2^(k+1) vertices.

    The first member is a single 4-edge; each later member is two disjoint
    copies of the previous one plus every 4-set meeting both copies in
    exactly two vertices.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k > max_k:
        raise ValueError(f"materializing beyond k={max_k} is not supported")
    if k == 1:
        return Hypergraph(4, 4, ((0, 1, 2, 3),))
    prev = doubling_graph(k - 1, max_k)
    half = prev.n
    edges = list(prev.edges)
    edges.extend(tuple(v + half for v in e) for e in prev.edges)
    for a in combinations(range(half), 2):
        for b in combinations(range(half, 2 * half), 2):
            edges.append(a + b)
    return Hypergraph(4, 2 * half, tuple(sorted(edges)))


def parity_partition_scan(h: Hypergraph, max_vertices: int = 25) -> list[tuple[int, ...]]:
    """All vertex subsets meeting every edge in an even count or fully.

    For 4-uniform inputs the admissible intersection sizes are {0, 2, 4};
    in general they are the even sizes together with the full edge.  The
    scan walks all 2^n subsets and is capped accordingly.
    """
    if h.n > max_vertices:
        raise ValueError(f"scan is capped at {max_vertices} vertices, got {h.n}")
    allowed = {i for i in range(h.k + 1) if i % 2 == 0} | {h.k}
    masks = h.edge_masks()
    hits = []
    for sub in range(2 ** h.n):
        if all((sub & e).bit_count() in allowed for e in masks):
            hits.append(tuple(v for v in range(h.n) if sub >> v & 1))
    return hits
