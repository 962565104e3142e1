"""Binary structures of finite integer sets.

A set of non-negative integers splits at its *top splitting level*: the
highest binary-digit position at which its elements do not all live in the
same block of width 2^(level+1).  Splitting recursively yields a weighted
rooted ordered binary tree, the set's binary structure.  This module computes
splitting levels, left/right subsets, the structure tree, monotonicity of the
tree, the level set of a monotone structure, and the sequence of highest
differing bits between consecutive elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

INCREASING = "increasing"
DECREASING = "decreasing"
BOTH = "both"
NEITHER = "neither"


def _canon(values: Iterable[int], min_size: int = 1) -> tuple[int, ...]:
    s = tuple(sorted(set(values)))
    if len(s) < min_size:
        raise ValueError(f"need at least {min_size} distinct elements, got {len(s)}")
    if s and s[0] < 0:
        raise ValueError("elements must be non-negative")
    return s


def delta(a: int, b: int) -> int:
    """Highest bit position at which two distinct non-negative integers differ."""
    if a == b:
        raise ValueError("delta requires distinct values")
    if a < 0 or b < 0:
        raise ValueError("elements must be non-negative")
    return (a ^ b).bit_length() - 1


def top_splitting_level(values: Iterable[int]) -> int:
    """Maximum level at which floor-division by 2^level still distinguishes elements.

    Equals the highest differing bit between the minimum and maximum element.
    """
    s = _canon(values, min_size=2)
    return delta(s[0], s[-1])


def split(values: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Partition a set by the parity of floor(s / 2^level) at the top splitting level.

    Both parts are non-empty and every left element is below every right element.
    """
    s = _canon(values, min_size=2)
    level = delta(s[0], s[-1])
    left = tuple(x for x in s if (x >> level) % 2 == 0)
    right = tuple(x for x in s if (x >> level) % 2 == 1)
    return left, right


@dataclass(frozen=True)
class BinaryStructureTree:
    """Node of a binary structure: weight = number of leaves below it.

    Leaves carry the set element they stand for; internal nodes carry the
    splitting level of the subset they root.
    """

    weight: int
    level: Optional[int]
    element: Optional[int]
    left: Optional["BinaryStructureTree"]
    right: Optional["BinaryStructureTree"]

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaves(self) -> list[int]:
        """In-order leaf elements; equals the sorted underlying set."""
        if self.is_leaf:
            return [self.element]
        return self.left.leaves() + self.right.leaves()

    def internal_nodes(self) -> list["BinaryStructureTree"]:
        if self.is_leaf:
            return []
        return [self] + self.left.internal_nodes() + self.right.internal_nodes()

    def internal_levels(self) -> list[int]:
        """Levels of internal nodes in left-to-right (in-order) order."""
        if self.is_leaf:
            return []
        return self.left.internal_levels() + [self.level] + self.right.internal_levels()


def binary_structure(values: Iterable[int]) -> BinaryStructureTree:
    """Build the binary structure tree of a non-empty set of non-negative integers."""
    s = _canon(values, min_size=1)

    def build(part: tuple[int, ...]) -> BinaryStructureTree:
        if len(part) == 1:
            return BinaryStructureTree(1, None, part[0], None, None)
        left, right = split(part)
        return BinaryStructureTree(
            len(part), delta(part[0], part[-1]), None, build(left), build(right)
        )

    return build(s)


def classify_monotone(tree: BinaryStructureTree) -> str:
    """Classify a structure tree as increasing / decreasing / both / neither.

    Increasing: every internal node's right child is a leaf.  Decreasing:
    every internal node's left child is a leaf.  Trees with at most two
    leaves are both.
    """
    internal = tree.internal_nodes()
    inc = all(node.right.is_leaf for node in internal)
    dec = all(node.left.is_leaf for node in internal)
    if inc and dec:
        return BOTH
    if inc:
        return INCREASING
    if dec:
        return DECREASING
    return NEITHER


def is_monotone(values: Iterable[int]) -> bool:
    return classify_monotone(binary_structure(values)) != NEITHER


def level_set(values: Iterable[int]) -> frozenset[int]:
    """Splitting levels along the spine of a monotone structure.

    Defined recursively: a singleton contributes nothing; otherwise the top
    splitting level is recorded and the recursion continues into the
    non-singleton side (left if increasing, right if decreasing).  Equals the
    set of internal-node levels of the structure tree.  Rejects sets whose
    structure is not monotone.
    """
    s = _canon(values, min_size=1)
    tree = binary_structure(s)
    kind = classify_monotone(tree)
    if kind == NEITHER:
        raise ValueError(f"set {s} does not have a monotone binary structure")
    out: set[int] = set()
    part = s
    while len(part) > 1:
        out.add(delta(part[0], part[-1]))
        left, right = split(part)
        if kind == DECREASING:
            part = right
        else:
            # increasing, or a two-element set (both); either side of a
            # two-element set is a singleton, so the choice is immaterial
            part = left
    return frozenset(out)


def delta_sequence(values: Iterable[int]) -> tuple[int, ...]:
    """Highest differing bit between each pair of consecutive sorted elements."""
    s = _canon(values, min_size=2)
    return tuple(delta(s[i], s[i + 1]) for i in range(len(s) - 1))


def format_tree(tree: BinaryStructureTree, indent: str = "  ") -> str:
    """Indented text rendering; internal nodes show weight and level."""
    lines: list[str] = []

    def walk(node: BinaryStructureTree, depth: int) -> None:
        pad = indent * depth
        if node.is_leaf:
            lines.append(f"{pad}leaf {node.element}")
        else:
            lines.append(f"{pad}node weight={node.weight} level={node.level}")
            walk(node.left, depth + 1)
            walk(node.right, depth + 1)

    walk(tree, 0)
    return "\n".join(lines)


def tree_to_dot(tree: BinaryStructureTree) -> str:
    """GraphViz DOT rendering with levels annotated on internal nodes."""
    lines = ["digraph binary_structure {", "  node [shape=circle];"]
    counter = [0]

    def walk(node: BinaryStructureTree) -> int:
        idx = counter[0]
        counter[0] += 1
        if node.is_leaf:
            lines.append(f'  n{idx} [label="{node.weight}", xlabel="{node.element}"];')
        else:
            lines.append(f'  n{idx} [label="{node.weight}", xlabel="l={node.level}"];')
            left = walk(node.left)
            right = walk(node.right)
            lines.append(f"  n{idx} -> n{left};")
            lines.append(f"  n{idx} -> n{right};")
        return idx

    walk(tree)
    lines.append("}")
    return "\n".join(lines)
