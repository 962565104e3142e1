"""Exact avoidance numbers for families of forbidden structure types.

The central quantity is the largest size of a set of non-negative integers
containing no n1-subset with increasing binary structure, no n2-subset with
decreasing structure, and no subset matching any type in a given family.
Monotone constraints are folded into the type framework as all-weight-1
caterpillars, so a single recursion over forbidden-type families covers all
three kinds of constraint.

The recursion: a leaf type of weight w caps the whole set at w-1 elements
(every w-set matches a bare leaf).  For a split set, each internal forbidden
type must be avoided inside both halves, and additionally one of its two
root subtrees must be blocked on the matching side, since a left part
matching the left subtree combines with a right part matching the right
subtree into a full match.  Maximizing over blocking choices and adding the
two halves gives the exact value; a proven Pascal-style upper bound supplies
the termination budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable

from .hypergraph import BudgetExhausted
from .structure_types import (
    DEC,
    INC,
    TypeTree,
    make_caterpillar,
    shape_matches,
    shape_of,
    type_size,
    validate_type,
)

LEFT = 0
RIGHT = 1


@dataclass(frozen=True)
class AvoidanceQuery:
    n1: int
    n2: int
    types: tuple[TypeTree, ...] = ()

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("n1 and n2 must be positive")
        for t in self.types:
            validate_type(t)

    def family(self) -> frozenset[TypeTree]:
        return frozenset(
            {make_caterpillar(INC, self.n1), make_caterpillar(DEC, self.n2)} | set(self.types)
        )


def pascal_bound(n1: int, n2: int) -> int:
    """Upper bound on the avoidance number with no extra types.

    Splitting shows f(n1,n2) <= f(n1-1,n2) + f(n1,n2-1) with f(2,.) = 1 and
    f(1,.) = 0, giving the binomial closed form; extra forbidden types only
    lower the value.
    """
    if n1 <= 1 or n2 <= 1:
        return 0
    return comb(n1 + n2 - 4, n1 - 2)


def _canonical(family: Iterable[TypeTree]) -> frozenset[TypeTree]:
    return frozenset(family)


class _Solver:
    """Memoized family recursion with a configurable state budget."""

    def __init__(self, max_states: int):
        self.max_states = max_states
        self.memo: dict[tuple[frozenset, int], int] = {}

    def value(self, family: frozenset, budget: int) -> int:
        if budget <= 0:
            return 0
        key = (family, budget)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        if len(self.memo) >= self.max_states:
            raise BudgetExhausted(
                f"avoidance recursion exceeded {self.max_states} memoized states"
            )
        caps = [t for t in family if isinstance(t, int)]
        cap = min(min(caps) - 1 if caps else budget, budget)
        if cap <= 0:
            self.memo[key] = 0
            return 0
        internals = sorted((t for t in family if isinstance(t, tuple)), key=repr)
        best = 1
        if cap >= 2:
            for choice in range(2 ** len(internals)):
                left_fam = set(internals)
                right_fam = set(internals)
                for i, t in enumerate(internals):
                    if (choice >> i) & 1 == LEFT:
                        left_fam.add(t[0])
                    else:
                        right_fam.add(t[1])
                val = self.value(_canonical(left_fam), cap - 1) + self.value(
                    _canonical(right_fam), cap - 1
                )
                best = max(best, min(cap, val))
        self.memo[key] = best
        return best

    def witness(self, family: frozenset, budget: int) -> tuple[int, ...]:
        """Reconstruct one maximizer; elements land in {0..2^bits-1}."""
        target = self.value(family, budget)
        if target == 0:
            return ()
        if target == 1:
            return (0,)
        caps = [t for t in family if isinstance(t, int)]
        cap = min(min(caps) - 1 if caps else budget, budget)
        internals = sorted((t for t in family if isinstance(t, tuple)), key=repr)
        for choice in range(2 ** len(internals)):
            left_fam = set(internals)
            right_fam = set(internals)
            for i, t in enumerate(internals):
                if (choice >> i) & 1 == LEFT:
                    left_fam.add(t[0])
                else:
                    right_fam.add(t[1])
            lf = _canonical(left_fam)
            rf = _canonical(right_fam)
            vl = self.value(lf, cap - 1)
            vr = self.value(rf, cap - 1)
            if min(cap, vl + vr) != target:
                continue
            take_left = min(vl, target)
            take_right = target - take_left
            wl = self.witness(lf, cap - 1)[:take_left]
            wr = self.witness(rf, cap - 1)[:take_right]
            if not wr:
                return wl
            if not wl:
                return wr
            shift_bits = max(max(wl).bit_length(), max(wr).bit_length())
            return tuple(sorted(wl + tuple(x + (1 << shift_bits) for x in wr)))
        raise AssertionError("no split reproduces the computed optimum")


def f_exact(query: AvoidanceQuery, max_states: int = 500_000) -> tuple[int, tuple[int, ...]]:
    """Exact avoidance number with a witness set realizing it."""
    solver = _Solver(max_states)
    family = query.family()
    budget = pascal_bound(query.n1, query.n2)
    value = solver.value(family, budget)
    witness = solver.witness(family, budget)
    assert len(witness) == value
    return value, witness


# ---------------------------------------------------------------------------
# brute-force oracle over a bounded universe


@lru_cache(maxsize=None)
def _shapes_by_mask(universe_bits: int, size: int) -> dict[int, TypeTree]:
    """All-weight-1 shapes of every size-subset of {0..2^universe_bits - 1}."""
    out: dict[int, TypeTree] = {}
    for subset in combinations(range(2 ** universe_bits), size):
        mask = 0
        for v in subset:
            mask |= 1 << v
        out[mask] = shape_of(subset)
    return out


@lru_cache(maxsize=None)
def _masks_matching(universe_bits: int, t: TypeTree) -> frozenset[int]:
    size = type_size(t)
    table = _shapes_by_mask(universe_bits, size)
    return frozenset(m for m, sh in table.items() if shape_matches(sh, t))


def contains_forbidden(values: Iterable[int], query: AvoidanceQuery) -> bool:
    """Direct check that a set contains some forbidden subset of the query."""
    s = tuple(sorted(set(values)))
    for t in query.family():
        size = type_size(t)
        if size > len(s):
            continue
        if size == 1:
            return True
        for sub in combinations(s, size):
            if shape_matches(shape_of(sub), t):
                return True
    return False


def f_bruteforce(query: AvoidanceQuery, universe_bits: int) -> int:
    """Maximum avoiding subset of {0..2^universe_bits - 1} by exhaustive search.

    Depth-first search over sets in ascending element order; each extension is
    vetted against precomputed tables of forbidden subsets, so every avoiding
    set in the universe is visited exactly once.
    """
    if query.n1 == 1 or query.n2 == 1 or any(type_size(t) == 1 for t in query.types):
        return 0
    sizes = sorted({type_size(t) for t in query.family()})
    forbidden: frozenset[int] = frozenset().union(
        *(_masks_matching(universe_bits, t) for t in query.family())
    )
    universe = 2 ** universe_bits
    best = 0

    def extend(elements: list[int], start: int) -> None:
        nonlocal best
        if len(elements) > best:
            best = len(elements)
        for x in range(start, universe):
            if len(elements) + (universe - x) <= best:
                break
            bit = 1 << x
            ok = True
            for r in sizes:
                if r - 1 > len(elements):
                    continue
                for sub in combinations(elements, r - 1):
                    mask = bit
                    for v in sub:
                        mask |= 1 << v
                    if mask in forbidden:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                extend(elements + [x], x + 1)

    extend([], 0)
    return best


# ---------------------------------------------------------------------------
# bounds and the two-variable maximum


def depth1_bound(query: AvoidanceQuery) -> int:
    """Linear upper bound available when the family has a two-leaf member.

    With a_min / b_min the least left / right leaf weights over two-leaf
    types in the family and k their common size, the avoidance number is at
    most (a_min-1)(n2-2) + (b_min-1)(n1-2) + 2k.  Requires n1, n2 >= 2.
    """
    if query.n1 < 2 or query.n2 < 2:
        raise ValueError("bound requires n1, n2 >= 2")
    flat = [
        t
        for t in query.types
        if isinstance(t, tuple) and isinstance(t[0], int) and isinstance(t[1], int)
    ]
    if not flat:
        raise ValueError("family has no two-leaf member")
    k = type_size(flat[0])
    a_min = min(t[0] for t in flat)
    b_min = min(t[1] for t in flat)
    return (a_min - 1) * (query.n2 - 2) + (b_min - 1) * (query.n1 - 2) + 2 * k


def g_max(n: int, t: TypeTree, max_states: int = 500_000) -> int:
    """Maximum avoidance number over all splits n1 + n2 = n with one forbidden type."""
    if n < 2:
        raise ValueError("n must be at least 2")
    validate_type(t)
    return max(
        f_exact(AvoidanceQuery(n1, n - n1, (t,)), max_states)[0] for n1 in range(1, n)
    )


def depth_recursion_check(n: int, t: TypeTree, max_states: int = 500_000) -> bool:
    """Check the split recursion on exact values of the two-variable maximum.

    Splitting bounds the maximum at n by the maximum at n-1 plus the larger
    of the two root-subtree maxima at n-1; sets of size at most one escape
    the split argument, hence the floor of 1 on the right-hand side.
    """
    if n < 3:
        raise ValueError("recursion check needs n >= 3")
    if isinstance(t, int):
        raise ValueError("recursion check needs a splittable type")
    lhs = g_max(n, t, max_states)
    rhs = g_max(n - 1, t, max_states) + max(
        g_max(n - 1, t[0], max_states), g_max(n - 1, t[1], max_states)
    )
    return lhs <= max(rhs, 1)
