"""Uniform hypergraphs with exact structural queries.

Edges are stored as sorted integer tuples over vertices 0..n-1; a parallel
bitmask form backs the exact searches.  The independence solver and the
embedding search are exact and deterministic; both are meant for desk-scale
instances (the independence solver is capped at 64 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

MAX_SOLVER_VERTICES = 64


class BudgetExhausted(RuntimeError):
    """A bounded search or materialization ran out of its work budget."""


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph on vertices 0..n-1 with a canonical sorted edge list."""

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.k}")
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for e in self.edges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"edge {e} does not have {self.k} distinct vertices")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge {e} is not sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)

    @classmethod
    def from_edges(cls, k: int, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        canon = sorted({tuple(sorted(e)) for e in edges})
        return cls(k, n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> list[int]:
        return [_mask(e) for e in self.edges]

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _unmask(m: int) -> tuple[int, ...]:
    out = []
    while m:
        b = m & -m
        out.append(b.bit_length() - 1)
        m ^= b
    return tuple(out)


def is_linear(h: Hypergraph) -> bool:
    """True when every two distinct edges share at most one vertex."""
    masks = h.edge_masks()
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] & masks[j]).bit_count() >= 2:
                return False
    return True


def berge_girth_exceeds(h: Hypergraph, g: int) -> bool:
    """True when the hypergraph has no alternating cycle of length 2..g.

    A cycle of length L consists of distinct vertices v_1..v_L and distinct
    edges e_1..e_L with {v_i, v_{i+1 mod L}} inside e_i.  For g=2 this
    coincides with linearity.
    """
    if g < 2:
        raise ValueError(f"girth threshold must be at least 2, got {g}")
    by_vertex: dict[int, list[int]] = {}
    for idx, e in enumerate(h.edges):
        for v in e:
            by_vertex.setdefault(v, []).append(idx)

    def close_cycle(first: int, last: int, used_edges: frozenset[int]) -> bool:
        for idx in by_vertex.get(last, ()):
            if idx not in used_edges and first in h.edges[idx]:
                return True
        return False

    def extend(first: int, vs: list[int], used_v: set[int], used_e: frozenset[int], length: int) -> bool:
        if len(vs) == length:
            return close_cycle(first, vs[-1], used_e)
        cur = vs[-1]
        for idx in by_vertex.get(cur, ()):
            if idx in used_e:
                continue
            for w in h.edges[idx]:
                # fix the cycle's minimum vertex as the start to cut symmetry
                if w in used_v or w <= first:
                    continue
                used_v.add(w)
                vs.append(w)
                if extend(first, vs, used_v, used_e | {idx}, length):
                    return True
                vs.pop()
                used_v.remove(w)
        return False

    for length in range(2, g + 1):
        for first in range(h.n):
            if extend(first, [first], {first}, frozenset(), length):
                return False
    return True


def _greedy_independent(n: int, masks: list[int]) -> int:
    chosen = 0
    cnt = 0
    for v in range(n):
        trial = chosen | (1 << v)
        if any(e & trial == e for e in masks):
            continue
        chosen = trial
        cnt += 1
    return cnt


def independence_number(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum size of a vertex set containing no edge, with one witness.

    Branch and bound over vertices in descending-degree order.  Each edge is
    keyed by its last vertex in that order, so a candidate extension is
    rejected exactly when it would complete an edge; pruning uses the supply
    of not-yet-considered vertices.  Deterministic.
    """
    n = h.n
    if n > MAX_SOLVER_VERTICES:
        raise ValueError(f"exact solver is capped at {MAX_SOLVER_VERTICES} vertices, got {n}")
    if n == 0:
        return 0, ()
    masks = sorted(set(h.edge_masks()))
    if not masks:
        return n, tuple(range(n))

    deg = [0] * n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    remapped = []
    for mask in masks:
        remapped.append(_mask(pos[v] for v in _unmask(mask)))

    # trigger = edge minus its highest vertex; an extension by that vertex is
    # illegal exactly when the trigger is already fully chosen
    triggers = sorted((e.bit_length() - 1, e & ~(1 << (e.bit_length() - 1))) for e in remapped)
    trig_max = np.array([t[0] for t in triggers], dtype=np.int64)
    trig_mask = np.array([t[1] for t in triggers], dtype=np.uint64)
    first_at = np.searchsorted(trig_max, np.arange(n + 1), side="left")

    best = _greedy_independent(n, remapped)
    best_set: list[int] = []
    if best > 0:
        # recover a greedy witness so best_set is never empty when best > 0
        chosen_mask = 0
        for v in range(n):
            trial = chosen_mask | (1 << v)
            if any(e & trial == e for e in remapped):
                continue
            chosen_mask = trial
            best_set.append(v)
        best = len(best_set)

    total_triggers = len(triggers)

    def extend(slist: list[int], smask: int, start: int) -> None:
        nonlocal best, best_set
        if len(slist) > best:
            best = len(slist)
            best_set = list(slist)
        lo = first_at[start]
        if lo < total_triggers:
            tail_mask = trig_mask[lo:]
            viol = (tail_mask & ~np.uint64(smask)) == 0
            blocked = set(trig_max[lo:][viol].tolist())
        else:
            blocked = set()
        for x in range(start, n):
            if len(slist) + (n - x) <= best:
                break
            if x in blocked:
                continue
            extend(slist + [x], smask | (1 << x), x + 1)

    extend([], 0, 0)
    witness = tuple(sorted(order[v] for v in best_set))
    assert not any(set(e) <= set(witness) for e in h.edges)
    return best, witness


FOUND = "found"
ABSENT = "absent"
EXHAUSTED = "budget"


@dataclass(frozen=True)
class EmbeddingWitness:
    """Injective vertex map sending every pattern edge onto a host edge.

    mapping[i] is the host vertex assigned to pattern vertex i.
    """

    mapping: tuple[int, ...]

    def check(self, pattern: Hypergraph, host: Hypergraph) -> bool:
        if len(set(self.mapping)) != len(self.mapping):
            return False
        host_edges = host.edge_set()
        for e in pattern.edges:
            if tuple(sorted(self.mapping[v] for v in e)) not in host_edges:
                return False
        return True


@dataclass(frozen=True)
class EmbedResult:
    status: str
    witness: Optional[EmbeddingWitness]
    nodes: int


def contains_copy(pattern: Hypergraph, host: Hypergraph, node_budget: int = 2_000_000) -> EmbedResult:
    """Search for a (not necessarily induced) copy of the pattern in the host.

    Three-valued: found (with witness), proven absent, or budget exhausted.
    Backtracking assigns pattern vertices in descending-degree order,
    preferring vertices adjacent to already-assigned ones, and checks every
    pattern edge as soon as it is fully mapped.
    """
    if pattern.k != host.k:
        raise ValueError(f"uniformity mismatch: pattern {pattern.k} vs host {host.k}")
    if pattern.m == 0:
        return EmbedResult(FOUND, EmbeddingWitness(tuple(range(pattern.n))), 0) \
            if pattern.n <= host.n else EmbedResult(ABSENT, None, 0)
    if pattern.n > host.n or pattern.m > host.m:
        return EmbedResult(ABSENT, None, 0)

    pdeg = [pattern.degree(v) for v in range(pattern.n)]
    hdeg = [host.degree(v) for v in range(host.n)]
    host_edges = host.edge_set()

    # assignment order: repeatedly take the highest-degree vertex adjacent to
    # the chosen prefix (falling back to global degree for fresh components)
    order: list[int] = []
    placed = set()
    adjacency: dict[int, set[int]] = {v: set() for v in range(pattern.n)}
    for e in pattern.edges:
        for v in e:
            adjacency[v].update(x for x in e if x != v)
    while len(order) < pattern.n:
        candidates = [v for v in range(pattern.n) if v not in placed]
        touching = [v for v in candidates if adjacency[v] & placed]
        pool = touching if touching else candidates
        v = max(pool, key=lambda u: (pdeg[u], len(adjacency[u] & placed), -u))
        order.append(v)
        placed.add(v)

    # edges checked at the step where their last vertex gets assigned
    rank = {v: i for i, v in enumerate(order)}
    check_at: list[list[tuple[int, ...]]] = [[] for _ in range(pattern.n)]
    for e in pattern.edges:
        check_at[max(rank[v] for v in e)].append(e)

    mapping = [-1] * pattern.n
    used = [False] * host.n
    nodes = 0

    def assign(step: int) -> Optional[str]:
        nonlocal nodes
        if step == pattern.n:
            return FOUND
        pv = order[step]
        for hv in range(host.n):
            if used[hv] or hdeg[hv] < pdeg[pv]:
                continue
            nodes += 1
            if nodes > node_budget:
                return EXHAUSTED
            mapping[pv] = hv
            ok = True
            for e in check_at[step]:
                image = tuple(sorted(mapping[v] for v in e))
                if image not in host_edges:
                    ok = False
                    break
            if ok:
                used[hv] = True
                res = assign(step + 1)
                used[hv] = False
                if res is not None:
                    mapping[pv] = -1 if res == EXHAUSTED else mapping[pv]
                    return res
            mapping[pv] = -1
        return None

    res = assign(0)
    if res == FOUND:
        witness = EmbeddingWitness(tuple(mapping))
        assert witness.check(pattern, host)
        return EmbedResult(FOUND, witness, nodes)
    if res == EXHAUSTED:
        return EmbedResult(EXHAUSTED, None, nodes)
    return EmbedResult(ABSENT, None, nodes)


def complement(h: Hypergraph, max_edges: int = 10_000_000) -> Hypergraph:
    """Flip edge membership over all k-subsets of the vertex set."""
    from math import comb

    total = comb(h.n, h.k)
    if total > max_edges:
        raise BudgetExhausted(f"complement would enumerate {total} edges (cap {max_edges})")
    present = h.edge_set()
    edges = tuple(e for e in combinations(range(h.n), h.k) if e not in present)
    return Hypergraph(h.k, h.n, edges)


def reverse(h: Hypergraph) -> Hypergraph:
    """Relabel every vertex v to n-1-v."""
    return Hypergraph.from_edges(h.k, h.n, ((h.n - 1 - v for v in e) for e in h.edges))


def to_text(h: Hypergraph) -> str:
    lines = [f"{h.k} {h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    rows: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows:
        raise ValueError("empty hypergraph text")
    header = rows[0]
    if len(header) != 3:
        raise ValueError(f"header must be 'k n m', got {header}")
    k, n, m = header
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"expected {m} edges, got {len(body)}")
    for e in body:
        if sorted(e) != e:
            raise ValueError(f"edge {e} is not in ascending order")
    return Hypergraph(k, n, tuple(tuple(e) for e in body))


def to_json_obj(h: Hypergraph) -> dict:
    return {"k": h.k, "n": h.n, "edges": [list(e) for e in h.edges]}


def from_json_obj(obj: dict) -> Hypergraph:
    return Hypergraph(int(obj["k"]), int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))
