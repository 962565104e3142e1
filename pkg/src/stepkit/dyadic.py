"""Dyadic partitions of integer sets and their counting properties.

A dyadic partition lists parts A_1..A_t where each part holds at most half
of what remains (its own size included) and the final part is a singleton.
The decomposition procedure peels the smaller side of the binary-structure
split off the residual at every step, recording which side (L or R) the
peeled part occupied and the splitting level of each residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .binary_structure import split, top_splitting_level

L = "L"
R = "R"


class LemmaViolation(AssertionError):
    """An exhaustively verified counting property failed; should never fire."""


@dataclass(frozen=True)
class DyadicDecomposition:
    """Result of the peeling procedure on a set of non-negative integers.

    parts[i] is A_{i+1}; beta[i] records the side A_{i+1} took when it was
    peeled (the terminal part inherits the side its residual took in the
    final split, or L for a singleton input).  residuals[i] is B_i, with
    B_0 the whole set, and split_levels[i] is the splitting level of B_i.
    """

    base: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    beta: tuple[str, ...]
    residuals: tuple[tuple[int, ...], ...]
    split_levels: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.parts)

    def part_index(self, x: int) -> int:
        """1-based index of the part containing x."""
        for i, part in enumerate(self.parts):
            if x in part:
                return i + 1
        raise KeyError(f"{x} is not in the base set")

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def dyadic_decompose(values: Iterable[int], tie_rule: str = "left") -> DyadicDecomposition:
    """Peel the smaller split side off the residual until a singleton remains.

    tie_rule resolves equal-size splits: "left" peels the left subset (with
    color L), "right" the right subset.
    """
    if tie_rule not in ("left", "right"):
        raise ValueError(f"tie_rule must be 'left' or 'right', got {tie_rule!r}")
    base = tuple(sorted(set(values)))
    if not base:
        raise ValueError("cannot decompose the empty set")
    parts: list[tuple[int, ...]] = []
    beta: list[str] = []
    residuals: list[tuple[int, ...]] = [base]
    levels: list[int] = []
    residual = base
    while len(residual) > 1:
        left, right = split(residual)
        levels.append(top_splitting_level(residual))
        peel_left = len(left) < len(right) or (len(left) == len(right) and tie_rule == "left")
        if peel_left:
            parts.append(left)
            beta.append(L)
            residual = right
        else:
            parts.append(right)
            beta.append(R)
            residual = left
        residuals.append(residual)
    parts.append(residual)
    beta.append((R if beta[-1] == L else L) if beta else L)
    return DyadicDecomposition(base, tuple(parts), tuple(beta), tuple(residuals), tuple(levels))


def is_dyadic_sizes(sizes: Sequence[int]) -> bool:
    """Size-profile form of the dyadic condition."""
    if not sizes or any(s < 1 for s in sizes):
        return False
    if sizes[-1] != 1:
        return False
    suffix = sum(sizes)
    for i, s in enumerate(sizes):
        if i < len(sizes) - 1 and 2 * s > suffix:
            return False
        suffix -= s
    return True


def is_dyadic(base: Iterable[int], parts: Sequence[Iterable[int]]) -> bool:
    """Whether the parts form a dyadic partition of the base set."""
    base_set = set(base)
    part_sets = [set(p) for p in parts]
    covered: set[int] = set()
    for p in part_sets:
        if not p or p & covered:
            return False
        covered |= p
    if covered != base_set:
        return False
    return is_dyadic_sizes([len(p) for p in part_sets])


def ordering_pi(d: DyadicDecomposition) -> tuple[int, ...]:
    """Total order induced by the decomposition, listed smallest first.

    An element in a later part is smaller than one in an earlier part; ties
    inside a part are broken by ascending integer value.  Earlier parts thus
    occupy the top of the order and the terminal part its bottom.
    """
    out: list[int] = []
    for part in reversed(d.parts):
        out.extend(sorted(part))
    return tuple(out)


def pi_ranks(d: DyadicDecomposition) -> dict[int, int]:
    return {v: i for i, v in enumerate(ordering_pi(d))}


def greedy_bound_check(d: DyadicDecomposition, index_set: Iterable[int]) -> bool:
    """Removing any collection of parts leaves at least floor(|A| / 2^|I|) elements."""
    idx = set(index_set)
    if not idx <= set(range(1, d.t + 1)):
        raise ValueError(f"index set {sorted(idx)} not within 1..{d.t}")
    n = len(d.base)
    removed = sum(len(d.parts[i - 1]) for i in idx)
    return n - removed >= n >> len(idx)


def two_color_bound_witness(d: DyadicDecomposition, beta: Sequence[str], s: int) -> str:
    """Color X whose parts keep at least floor(|A| / 2^(2s-1)) elements.

    The guarantee must survive deleting any s-1 parts; it is checked by
    exhaustive enumeration of those deletions.  A coloring with no valid X
    would contradict an exhaustively verified counting fact, so that case
    raises LemmaViolation.
    """
    t = d.t
    if len(beta) != t or any(c not in (L, R) for c in beta):
        raise ValueError(f"beta must assign L/R to each of the {t} parts")
    if not 1 <= s or not s < t / 2:
        raise ValueError(f"s must satisfy 1 <= s < t/2, got s={s}, t={t}")
    n = len(d.base)
    bound = n >> (2 * s - 1)
    sizes = d.sizes()
    for color in (L, R):
        if bound == 0:
            return color
        ok = True
        for dropped in combinations(range(t), s - 1):
            kept = sum(
                sizes[i] for i in range(t) if i not in dropped and beta[i] == color
            )
            if kept < bound:
                ok = False
                break
        if ok:
            return color
    raise LemmaViolation(
        f"no color meets the bound for sizes={sizes}, beta={tuple(beta)}, s={s}"
    )


# ---------------------------------------------------------------------------
# exhaustive suites over size profiles


def dyadic_profiles(n: int):
    """All dyadic size profiles of a set of n elements."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        yield (1,)
        return
    for first in range(1, n // 2 + 1):
        for rest in dyadic_profiles(n - first):
            yield (first,) + rest


def _profile_decomposition(profile: Sequence[int]) -> DyadicDecomposition:
    """Dress a size profile up as a decomposition over 0..n-1.

    Only sizes matter to the counting checks, so parts are consecutive
    blocks; residuals and levels are filled with placeholders.
    """
    parts = []
    at = 0
    for s in profile:
        parts.append(tuple(range(at, at + s)))
        at += s
    base = tuple(range(at))
    beta = tuple(L for _ in profile)
    return DyadicDecomposition(base, tuple(parts), beta, (base,), ())


def verify_greedy_bound(max_size: int) -> list[tuple]:
    """Exhaustively check the leftover bound over all profiles and index sets."""
    violations = []
    for n in range(1, max_size + 1):
        for profile in dyadic_profiles(n):
            d = _profile_decomposition(profile)
            t = len(profile)
            for r in range(t + 1):
                for idx in combinations(range(1, t + 1), r):
                    if not greedy_bound_check(d, idx):
                        violations.append((profile, idx))
    return violations


def verify_two_color_bound(max_size: int) -> list[tuple]:
    """Exhaustively check the two-coloring bound over profiles, colorings, s."""
    from itertools import product

    violations = []
    for n in range(1, max_size + 1):
        for profile in dyadic_profiles(n):
            d = _profile_decomposition(profile)
            t = len(profile)
            for beta in product((L, R), repeat=t):
                s = 1
                while s < t / 2:
                    try:
                        two_color_bound_witness(d, beta, s)
                    except LemmaViolation:
                        violations.append((profile, beta, s))
                    s += 1
    return violations
