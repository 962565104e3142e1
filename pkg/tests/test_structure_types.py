import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stepkit.binary_structure import NEITHER, binary_structure, classify_monotone, delta_sequence
from stepkit.structure_types import (
    all_types_of_size,
    is_monotone_type,
    is_of_type,
    make_caterpillar,
    make_tab,
    parse_type,
    parse_type_family,
    serialize_type,
    shape_of,
    type_size,
    validate_type,
)

type_trees = st.recursive(
    st.integers(min_value=1, max_value=9),
    lambda children: st.tuples(children, children),
    max_leaves=6,
)


def test_parse_examples():
    assert parse_type("(2,2)") == (2, 2)
    assert type_size(parse_type("(2,2)")) == 4
    assert parse_type("(1,(2,1))") == (1, (2, 1))
    assert type_size(parse_type("(1,(2,1))")) == 4
    assert parse_type(" ( 1 , ( 2 , 1 ) ) ") == (1, (2, 1))


def test_parse_rejects_bad_literals():
    for bad in ("0", "(1,0)", "", "(1,2", "1,2)", "(1,2))", "x", "(1;2)"):
        with pytest.raises(ValueError):
            parse_type(bad)


def test_parse_family():
    assert parse_type_family("(2,2),(1,(2,1))") == ((2, 2), (1, (2, 1)))
    assert parse_type_family("") == ()
    assert parse_type_family("3") == (3,)


@settings(max_examples=300)
@given(type_trees)
def test_serialize_round_trip(t):
    assert parse_type(serialize_type(t)) == t


def test_make_tab():
    assert make_tab(2, 2) == parse_type("(2,2)")
    with pytest.raises(ValueError):
        make_tab(0, 1)


def test_make_caterpillar():
    assert make_caterpillar("inc", 4) == parse_type("(((1,1),1),1)")
    assert make_caterpillar("inc", 1) == 1
    assert make_caterpillar("dec", 3) == (1, (1, 1))
    with pytest.raises(ValueError):
        make_caterpillar("sideways", 3)


def test_is_of_type_examples():
    assert is_of_type([0, 1, 6, 7], (2, 2))
    assert is_of_type([5, 6, 7, 8, 9], (3, 2))
    assert not is_of_type([5, 6, 7, 8, 9], (2, 3))


def test_is_of_type_size_mismatch():
    with pytest.raises(ValueError):
        is_of_type([1, 2, 3], (2, 2))


def _all_unit_leaves(t):
    if isinstance(t, int):
        return t == 1
    return _all_unit_leaves(t[0]) and _all_unit_leaves(t[1])


def test_full_shape_type_matches_exactly():
    unit_trees = {m: [t for t in all_types_of_size(m) if _all_unit_leaves(t)] for m in range(1, 8)}
    rng = random.Random(2)
    for _ in range(200):
        s = rng.sample(range(256), rng.randint(1, 7))
        shape = shape_of(s)
        assert is_of_type(s, shape)
        # the all-weight-1 tree matching s is unique among all-weight-1 trees
        for t in unit_trees[len(s)]:
            if t != shape:
                assert not is_of_type(s, t)


def test_caterpillar_membership_is_monotonicity():
    rng = random.Random(3)
    for _ in range(300):
        s = rng.sample(range(2**16), rng.randint(1, 8))
        kind = classify_monotone(binary_structure(s))
        inc = is_of_type(s, make_caterpillar("inc", len(s)))
        dec = is_of_type(s, make_caterpillar("dec", len(s)))
        assert inc == (kind in ("increasing", "both"))
        assert dec == (kind in ("decreasing", "both"))


def test_is_monotone_type_examples():
    assert not is_monotone_type((2, 2))
    assert is_monotone_type(5)
    assert is_monotone_type((1, (1, 2)))


def _monotone_sets_full_enumeration(size):
    """All monotone sets of the given size inside {0..2^size-1}, by raw scan."""
    out = []
    for s in combinations(range(2**size), size):
        if size == 1 or classify_monotone(binary_structure(s)) != NEITHER:
            out.append(s)
    return out


def test_shape_is_a_function_of_the_delta_sequence():
    for size in range(2, 5):
        by_seq = {}
        for s in combinations(range(2**size), size):
            by_seq.setdefault(delta_sequence(s), set()).add(shape_of(s))
        assert all(len(shapes) == 1 for shapes in by_seq.values())


def _monotone_representatives(size):
    """One set per strictly monotone level sequence over {0..size-1}.

    Within {0..2^size-1} a monotone set's levels are size-1 distinct values
    below size, and the shape of a set depends only on its level sequence
    (checked exhaustively above), so these representatives cover every
    monotone set of the universe up to shape.
    """
    if size == 1:
        return [(0,)]
    reps = []
    top = 2**size - 1
    for levels in combinations(range(size), size - 1):
        increasing = (0,) + tuple(1 << d for d in levels)
        reps.append(increasing)
        reps.append(tuple(sorted(top - x for x in increasing)))
    for s in reps:
        assert classify_monotone(binary_structure(s)) != NEITHER
    return reps


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_monotone_type_oracle_small(size):
    monotone_sets = _monotone_sets_full_enumeration(size)
    for t in all_types_of_size(size):
        realizable = any(is_of_type(s, t) for s in monotone_sets)
        assert is_monotone_type(t) == realizable, serialize_type(t)


@pytest.mark.parametrize("size", [2, 3, 4])
def test_representatives_match_full_enumeration(size):
    full = _monotone_sets_full_enumeration(size)
    reps = _monotone_representatives(size)
    for t in all_types_of_size(size):
        assert any(is_of_type(s, t) for s in full) == any(is_of_type(s, t) for s in reps)


def test_monotone_type_oracle_size_six():
    # raw subset enumeration is out of reach at six bits; the representative
    # route is validated against the raw scan at smaller sizes above
    reps = _monotone_representatives(6)
    for t in all_types_of_size(6):
        realizable = any(is_of_type(s, t) for s in reps)
        assert is_monotone_type(t) == realizable, serialize_type(t)


def test_validate_type_rejects_junk():
    for bad in (0, -2, (1,), (1, 2, 3), "x", (True, 1)):
        with pytest.raises(ValueError):
            validate_type(bad)
