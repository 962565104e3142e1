"""Types of binary structure: weighted shape patterns matched by truncation.

A type is a weighted rooted ordered binary tree whose leaves carry positive
integer weights and whose internal weights are the sums of their children.
Types are represented as nested tuples: an ``int`` is a leaf weight, and a
pair ``(left, right)`` is an internal node.  Internal weights are always
computed, never stored.

A set S *matches* a type T when T arises from the binary structure of S by
truncating whole subtrees down to leaves: a leaf of weight w stands for any
subtree with w leaves, and an internal type node must line up with an
internal structure node side by side.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Union

from .binary_structure import split

TypeTree = Union[int, tuple]

INC = "inc"
DEC = "dec"


def validate_type(t: TypeTree) -> None:
    """Reject anything that is not a well-formed type tree."""
    if isinstance(t, bool):
        raise ValueError("type leaves must be integers, not booleans")
    if isinstance(t, int):
        if t < 1:
            raise ValueError(f"leaf weight must be positive, got {t}")
        return
    if isinstance(t, tuple) and len(t) == 2:
        validate_type(t[0])
        validate_type(t[1])
        return
    raise ValueError(f"not a type tree: {t!r}")


def type_size(t: TypeTree) -> int:
    """Root weight: the sum of all leaf weights."""
    if isinstance(t, int):
        return t
    return type_size(t[0]) + type_size(t[1])


def type_depth(t: TypeTree) -> int:
    if isinstance(t, int):
        return 0
    return 1 + max(type_depth(t[0]), type_depth(t[1]))


def parse_type(text: str) -> TypeTree:
    """Parse the parenthesized grammar  TYPE := INT | "(" TYPE "," TYPE ")".

    Whitespace is ignored.  Round-trips with serialize_type.
    """
    s = text.strip()
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def parse_node() -> TypeTree:
        nonlocal pos
        skip_ws()
        if pos >= len(s):
            raise ValueError(f"unexpected end of type literal: {text!r}")
        if s[pos] == "(":
            pos += 1
            left = parse_node()
            skip_ws()
            if pos >= len(s) or s[pos] != ",":
                raise ValueError(f"expected ',' at position {pos} in {text!r}")
            pos += 1
            right = parse_node()
            skip_ws()
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"expected ')' at position {pos} in {text!r}")
            pos += 1
            return (left, right)
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ValueError(f"expected integer at position {pos} in {text!r}")
        w = int(s[start:pos])
        if w < 1:
            raise ValueError(f"leaf weight must be positive, got {w}")
        return w

    node = parse_node()
    skip_ws()
    if pos != len(s):
        raise ValueError(f"trailing input at position {pos} in {text!r}")
    validate_type(node)
    return node


def serialize_type(t: TypeTree) -> str:
    validate_type(t)
    if isinstance(t, int):
        return str(t)
    return f"({serialize_type(t[0])},{serialize_type(t[1])})"


def parse_type_family(text: str) -> tuple[TypeTree, ...]:
    """Parse a comma-separated list of type literals, e.g. '(2,2),(1,(2,1))'.

    Top-level commas separate family members; commas inside parentheses
    belong to the member.  An empty string is the empty family.
    """
    s = text.strip()
    if not s:
        return ()
    members: list[str] = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            members.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    members.append("".join(cur))
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return tuple(parse_type(m) for m in members)


def make_tab(a: int, b: int) -> TypeTree:
    """Two-leaf type with weight a on the left and b on the right."""
    if a < 1 or b < 1:
        raise ValueError("leaf weights must be positive")
    return (a, b)


def make_caterpillar(direction: str, m: int) -> TypeTree:
    """All-weight-1 caterpillar of size m.

    The increasing caterpillar has every right child a unit leaf; a set
    matches it exactly when the set has m elements and an increasing binary
    structure.  Mirrored for "dec".
    """
    if m < 1:
        raise ValueError("size must be positive")
    if direction not in (INC, DEC):
        raise ValueError(f"direction must be '{INC}' or '{DEC}'")
    t: TypeTree = 1
    for _ in range(m - 1):
        t = (t, 1) if direction == INC else (1, t)
    return t


def shape_of(values: Iterable[int]) -> TypeTree:
    """All-weight-1 type tree mirroring the binary structure of a set."""
    s = tuple(sorted(set(values)))
    if not s:
        raise ValueError("shape of the empty set is undefined")

    def build(part: tuple[int, ...]) -> TypeTree:
        if len(part) == 1:
            return 1
        left, right = split(part)
        return (build(left), build(right))

    return build(s)


def shape_matches(shape: TypeTree, t: TypeTree) -> bool:
    """Truncation match between an all-weight-1 shape and a type tree."""
    if isinstance(t, int):
        return type_size(shape) == t
    if isinstance(shape, int):
        return False
    return shape_matches(shape[0], t[0]) and shape_matches(shape[1], t[1])


def is_of_type(values: Iterable[int], t: TypeTree) -> bool:
    """Whether the set matches the type.  The set size must equal the type size."""
    validate_type(t)
    s = tuple(sorted(set(values)))
    if len(s) != type_size(t):
        raise ValueError(f"set size {len(s)} does not match type size {type_size(t)}")
    return shape_matches(shape_of(s), t)


def is_monotone_type(t: TypeTree) -> bool:
    """Whether some set with a monotone binary structure matches the type.

    A monotone structure is a caterpillar, and its truncations are exactly:
    a single leaf, or a caterpillar whose off-spine children are unit leaves
    with the deepest spine leaf carrying any weight (one orientation per
    monotone direction).
    """
    validate_type(t)

    def inc_realizable(node: TypeTree) -> bool:
        if isinstance(node, int):
            return True
        return node[1] == 1 and inc_realizable(node[0])

    def dec_realizable(node: TypeTree) -> bool:
        if isinstance(node, int):
            return True
        return node[0] == 1 and dec_realizable(node[1])

    return inc_realizable(t) or dec_realizable(t)


@lru_cache(maxsize=None)
def _all_types_of_size(size: int) -> tuple[TypeTree, ...]:
    out: list[TypeTree] = [size]
    for a in range(1, size):
        for left in _all_types_of_size(a):
            for right in _all_types_of_size(size - a):
                out.append((left, right))
    return tuple(out)


def all_types_of_size(size: int) -> list[TypeTree]:
    """Every type tree of the given size, in a deterministic order."""
    if size < 1:
        raise ValueError("size must be positive")
    return list(_all_types_of_size(size))
