"""Oriented hypergraphs, the transversal-edge property, and edge blow-ups.

An oriented s-graph assigns every edge a bijection onto positions 1..s,
stored as an ordered tuple.  The property of interest: for every dyadic
partition of the vertex set, every L/R coloring of its parts, and every
vertex ordering, some edge must cross s distinct parts of one color with its
orientation agreeing with the ordering.  This module provides a seeded
sampler for random linear oriented graphs, an exact verifier for tiny vertex
counts, sampled statistics for moderate ones, the potential-edge count, the
blow-up that plants an ordered hypergraph into every oriented edge, and the
split-level reader used when converting transversal chains back into source
edges.

The exact verifier enumerates abstract ordered set partitions satisfying the
dyadic size conditions.  These form a superset of the partitions reachable
by integer splitting, so a "verified" verdict is conservative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from .constructions import OrderedHypergraph
from .dyadic import DyadicDecomposition, L, R
from .hypergraph import BudgetExhausted, Hypergraph, is_linear, berge_girth_exceeds

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
EXHAUSTED = "budget"


@dataclass(frozen=True)
class OrientedHypergraph:
    """s-graph whose edges are ordered tuples; position j holds the vertex at rank j."""

    s: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.s < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.s}")
        seen = set()
        for e in self.edges:
            if len(e) != self.s or len(set(e)) != self.s:
                raise ValueError(f"edge {e} must have {self.s} distinct entries")
            if min(e) < 0 or max(e) >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
            key = frozenset(e)
            if key in seen:
                raise ValueError(f"duplicate underlying edge {sorted(key)}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def underlying(self) -> Hypergraph:
        return Hypergraph.from_edges(self.s, self.n, self.edges)

    def to_json_obj(self) -> dict:
        return {"s": self.s, "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "OrientedHypergraph":
        return cls(int(obj["s"]), int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of the random construction: edge probability c * n^(2-s)."""

    n: int
    s: int
    c: float
    seed: int
    max_attempts: int = 200

    def __post_init__(self):
        if self.s < 2 or self.n < self.s:
            raise ValueError(f"need n >= s >= 2, got n={self.n}, s={self.s}")
        if self.c <= 0:
            raise ValueError("c must be positive")
        p = self.edge_probability
        if not 0 < p <= 1:
            raise ValueError(f"edge probability {p} outside (0, 1]")

    @property
    def edge_probability(self) -> float:
        return self.c * self.n ** (2 - self.s)


def sample_oriented(cfg: SearchConfig, rng: Optional[random.Random] = None) -> OrientedHypergraph:
    """One seeded sample: independent edge coin flips, independent orientations."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    p = cfg.edge_probability
    edges = []
    for combo in combinations(range(cfg.n), cfg.s):
        if rng.random() < p:
            tup = list(combo)
            rng.shuffle(tup)
            edges.append(tuple(tup))
    return OrientedHypergraph(cfg.s, cfg.n, tuple(edges))


def sample_linear_oriented(
    cfg: SearchConfig, girth_exceeds: Optional[int] = None
) -> tuple[OrientedHypergraph, int]:
    """Rejection-sample until the underlying graph is linear (and optionally
    has no short alternating cycles).  Returns the sample and the attempt count."""
    rng = random.Random(cfg.seed)
    for attempt in range(1, cfg.max_attempts + 1):
        h0 = sample_oriented(cfg, rng)
        under = h0.underlying()
        if not is_linear(under):
            continue
        if girth_exceeds is not None and not berge_girth_exceeds(under, girth_exceeds):
            continue
        return h0, attempt
    raise BudgetExhausted(f"no admissible sample within {cfg.max_attempts} attempts")


# ---------------------------------------------------------------------------
# transversal-edge checks


def edge_is_transversal(
    edge: Sequence[int],
    part_of: dict[int, int],
    beta: Sequence[str],
    pi_rank: dict[int, int],
) -> bool:
    """Edge crosses distinct same-colored parts with orientation matching the order."""
    parts = [part_of[v] for v in edge]
    if len(set(parts)) != len(parts):
        return False
    colors = {beta[i] for i in parts}
    if len(colors) != 1:
        return False
    ranks = [pi_rank[v] for v in edge]
    return all(ranks[i] < ranks[i + 1] for i in range(len(ranks) - 1))


def abstract_dyadic_partitions(vertices: tuple[int, ...]):
    """All ordered set partitions obeying the dyadic size conditions."""
    if len(vertices) == 1:
        yield (vertices,)
        return
    n = len(vertices)
    rest_pool = vertices
    for first_size in range(1, n // 2 + 1):
        for first in combinations(rest_pool, first_size):
            remaining = tuple(v for v in rest_pool if v not in first)
            for rest in abstract_dyadic_partitions(remaining):
                yield (first,) + rest


@dataclass(frozen=True)
class TransversalVerdict:
    status: str
    counterexample: Optional[tuple] = None
    checked: int = 0


def verify_transversal_property(
    h0: OrientedHypergraph, max_triples: int = 5_000_000
) -> TransversalVerdict:
    """Exhaustively test every (partition, coloring, ordering) triple.

    Returns "verified" when every admissible triple has a transversal edge,
    otherwise the first counterexample triple.  Work is counted in triples;
    exceeding the cap yields the distinct "budget" status.
    """
    vertices = tuple(range(h0.n))
    checked = 0
    for partition in abstract_dyadic_partitions(vertices):
        t = len(partition)
        part_of = {v: i for i, part in enumerate(partition) for v in part}
        for beta in product((L, R), repeat=t):
            for pi in permutations(vertices):
                checked += 1
                if checked > max_triples:
                    return TransversalVerdict(EXHAUSTED, None, checked - 1)
                pi_rank = {v: i for i, v in enumerate(pi)}
                if not any(
                    edge_is_transversal(e, part_of, beta, pi_rank) for e in h0.edges
                ):
                    return TransversalVerdict(COUNTEREXAMPLE, (partition, beta, pi), checked)
    return TransversalVerdict(VERIFIED, None, checked)


def random_admissible_triple(n: int, rng: random.Random) -> tuple[tuple, tuple, tuple]:
    """One random (partition, coloring, ordering) triple for statistics."""
    vertices = list(range(n))
    rng.shuffle(vertices)
    partition = []
    rest = vertices
    while len(rest) > 1:
        cut = rng.randint(1, len(rest) // 2)
        partition.append(tuple(sorted(rest[:cut])))
        rest = rest[cut:]
    partition.append(tuple(rest))
    beta = tuple(rng.choice((L, R)) for _ in partition)
    pi = list(range(n))
    rng.shuffle(pi)
    return tuple(partition), beta, tuple(pi)


def transversal_statistics(h0: OrientedHypergraph, trials: int, seed: int) -> float:
    """Fraction of random admissible triples that admit a transversal edge."""
    rng = random.Random(seed)
    hits = 0
    for _ in range(trials):
        partition, beta, pi = random_admissible_triple(h0.n, rng)
        part_of = {v: i for i, part in enumerate(partition) for v in part}
        pi_rank = {v: i for i, v in enumerate(pi)}
        if any(edge_is_transversal(e, part_of, beta, pi_rank) for e in h0.edges):
            hits += 1
    return hits / trials if trials else 0.0


def count_potential_edges(
    partition: Sequence[Sequence[int]], beta: Sequence[str], s: int
) -> int:
    """Number of unordered s-sets crossing s distinct parts of a single color.

    Computed exactly as an elementary symmetric sum of part sizes per color.
    """
    if len(partition) != len(beta):
        raise ValueError("partition and coloring lengths differ")
    total = 0
    for color in (L, R):
        sizes = [len(p) for p, b in zip(partition, beta) if b == color]
        # coefficient of z^s in prod (1 + size*z)
        coeffs = [1] + [0] * s
        for size in sizes:
            for j in range(min(s, len(coeffs) - 1), 0, -1):
                coeffs[j] += size * coeffs[j - 1]
        total += coeffs[s]
    return total


# ---------------------------------------------------------------------------
# blow-up and split-level reading


def blowup(h0: OrientedHypergraph, pattern: OrderedHypergraph) -> Hypergraph:
    """Plant the ordered pattern into every oriented edge, rank onto position.

    The pattern must have exactly s vertices; its rank-i vertex lands on
    tuple position i of each edge.  Output uniformity is the pattern's.
    """
    if pattern.n != h0.s:
        raise ValueError(
            f"pattern has {pattern.n} vertices but edges have {h0.s} positions"
        )
    edges = set()
    for tup in h0.edges:
        placement = {pattern.order[i]: tup[i] for i in range(h0.s)}
        for e in pattern.hypergraph.edges:
            image = tuple(sorted(placement[v] for v in e))
            assert len(set(image)) == len(image)
            edges.add(image)
    return Hypergraph(pattern.hypergraph.k, h0.n, tuple(sorted(edges)))


def phi_star(
    d: DyadicDecomposition, x: int, side: str, n_bits: Optional[int] = None
) -> int:
    """Splitting level of the residual preceding x's part, reflected for side L.

    Defined for elements whose part index i satisfies 2 <= i <= t-1, so that
    the preceding residual exists and was actually split.  Side R returns the
    recorded level; side L returns n_bits-1-level.
    """
    if side not in (L, R):
        raise ValueError(f"side must be '{L}' or '{R}'")
    i = d.part_index(x)
    if i < 2:
        raise ValueError(f"level before part 1 is not defined (x={x})")
    if i > d.t - 1:
        raise ValueError(f"residual before part {i} is a singleton, no level recorded")
    level = d.split_levels[i - 1]
    if side == L:
        if n_bits is None:
            raise ValueError("side L needs the universe bit count for reflection")
        return n_bits - 1 - level
    return level
