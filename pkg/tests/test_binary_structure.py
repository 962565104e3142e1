import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_delta
from stepkit.binary_structure import (
    BOTH,
    DECREASING,
    INCREASING,
    NEITHER,
    binary_structure,
    classify_monotone,
    delta,
    delta_sequence,
    level_set,
    split,
    top_splitting_level,
)

int_sets = st.sets(st.integers(min_value=0, max_value=2**63 - 1), min_size=2, max_size=10)


def test_top_splitting_level_examples():
    assert top_splitting_level([5, 6, 7, 8, 9]) == 3
    assert top_splitting_level([0, 1]) == 0
    assert top_splitting_level([6, 7]) == 0


def test_top_splitting_level_scan_definition():
    rng = random.Random(0)
    for _ in range(300):
        s = rng.sample(range(2**20), rng.randint(2, 8))
        by_def = max(
            level for level in range(25) if len({x >> level for x in s}) >= 2
        )
        assert top_splitting_level(s) == by_def


def test_split_examples():
    assert split([5, 6, 7, 8, 9]) == ((5, 6, 7), (8, 9))
    assert split([5, 6, 7]) == ((5,), (6, 7))
    assert split([0, 1]) == ((0,), (1,))


def test_small_sets_rejected():
    with pytest.raises(ValueError):
        top_splitting_level([3])
    with pytest.raises(ValueError):
        split([3])
    with pytest.raises(ValueError):
        delta_sequence([3])
    with pytest.raises(ValueError):
        binary_structure([])
    with pytest.raises(ValueError):
        top_splitting_level([-1, 2])


def test_structure_tree_of_five_through_nine():
    tree = binary_structure([5, 6, 7, 8, 9])
    assert (tree.weight, tree.level) == (5, 3)
    assert (tree.left.weight, tree.left.level) == (3, 1)
    assert (tree.right.weight, tree.right.level) == (2, 0)
    assert tree.left.left.is_leaf and tree.left.left.element == 5
    assert (tree.left.right.weight, tree.left.right.level) == (2, 0)
    assert tree.leaves() == [5, 6, 7, 8, 9]


def test_singleton_tree():
    tree = binary_structure([7])
    assert tree.is_leaf and tree.weight == 1 and tree.element == 7


def test_structure_tree_two_blocks():
    tree = binary_structure([0, 1, 6, 7])
    assert tree.level == 2
    assert tree.left.weight == 2 and tree.left.level == 0
    assert tree.right.weight == 2 and tree.right.level == 0


def test_classify_examples():
    assert classify_monotone(binary_structure([5, 6, 7, 8, 9])) == NEITHER
    assert classify_monotone(binary_structure([0, 1])) == BOTH
    assert classify_monotone(binary_structure([7])) == BOTH
    # strictly increasing deltas give an increasing structure; the deepest
    # split peels the maximum off on the right
    assert classify_monotone(binary_structure([1, 2, 4, 8, 16])) == INCREASING
    assert classify_monotone(binary_structure([0, 8, 12, 14, 15])) == DECREASING


def test_level_set_examples():
    assert level_set([0, 1, 2, 4]) == frozenset({0, 1, 2})
    assert level_set([7]) == frozenset()
    assert level_set([1, 2, 4, 8, 16]) == frozenset({1, 2, 3, 4})


def test_level_set_rejects_non_monotone():
    with pytest.raises(ValueError):
        level_set([5, 6, 7, 8, 9])


def test_delta_sequence_examples():
    assert delta_sequence([5, 6, 7, 8, 9]) == (1, 0, 3, 0)
    assert delta_sequence([0, 1]) == (0,)
    assert delta_sequence([0, 1, 6, 7]) == (0, 2, 0)


def test_delta_matches_naive_scan():
    rng = random.Random(1)
    for _ in range(200):
        a, b = rng.sample(range(2**30), 2)
        assert delta(a, b) == naive_delta(a, b)


@settings(max_examples=400)
@given(int_sets)
def test_internal_levels_are_delta_multiset(s):
    tree = binary_structure(s)
    assert Counter(tree.internal_levels()) == Counter(delta_sequence(s))


@settings(max_examples=400)
@given(int_sets)
def test_in_order_levels_equal_delta_sequence(s):
    # stronger than the multiset property: in-order internal levels are the deltas
    assert tuple(binary_structure(s).internal_levels()) == delta_sequence(s)


@settings(max_examples=400)
@given(int_sets)
def test_monotone_iff_delta_strictly_monotone(s):
    seq = delta_sequence(s)
    kind = classify_monotone(binary_structure(s))
    inc = all(seq[i] < seq[i + 1] for i in range(len(seq) - 1))
    dec = all(seq[i] > seq[i + 1] for i in range(len(seq) - 1))
    assert (kind in (INCREASING, BOTH)) == inc
    assert (kind in (DECREASING, BOTH)) == dec


@settings(max_examples=400)
@given(int_sets)
def test_level_set_is_delta_set_when_monotone(s):
    if classify_monotone(binary_structure(s)) == NEITHER:
        return
    assert level_set(s) == frozenset(delta_sequence(s))
    assert max(level_set(s)) == top_splitting_level(s)


@settings(max_examples=400)
@given(int_sets)
def test_split_respects_order(s):
    left, right = split(s)
    assert left and right
    assert max(left) < min(right)
    assert sorted(left + right) == sorted(s)
