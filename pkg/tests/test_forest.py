import pytest
from hypothesis import given, strategies as st

from rtmaps.forest import (
    LEAF,
    UNIT,
    Forest,
    ParseError,
    b_minus,
    b_plus,
    canonicalize,
    enumerate_forests,
    enumerate_trees,
    forest_product,
    ladder,
    parse_forest,
    parse_tree,
)

from conftest import forests, raw_trees


def _ahu(parent: list[int]) -> str:
    """Canonical code of a tree given as a parent array (parent[0] = -1)."""
    kids: dict[int, list[int]] = {i: [] for i in range(len(parent))}
    for i, p in enumerate(parent):
        if p >= 0:
            kids[p].append(i)

    def code(v):
        return "(" + "".join(sorted(code(c) for c in kids[v])) + ")"

    return code(0)


def _brute_force_tree_count(n: int) -> int:
    # every unlabelled tree arises from some recursive labelling: parent[i] < i
    seen = set()

    def rec(parent):
        if len(parent) == n:
            seen.add(_ahu(parent))
            return
        for p in range(len(parent)):
            rec(parent + [p])

    rec([-1])
    return len(seen)


def test_leaf_is_fixed_point():
    assert canonicalize([]) == LEAF
    assert canonicalize(LEAF).encoding == "[]"


def test_children_sorted_leaf_first():
    t = canonicalize([[[]], []])
    assert t.encoding == "[[][[]]]"


def test_two_embeddings_same_encoding():
    assert canonicalize([[], [[]]]) == canonicalize([[[]], []])


def test_forest_product_unit_and_commutativity(two_dots):
    f = parse_forest("[[]]*[]")
    assert forest_product(UNIT, f) == f
    assert forest_product(Forest((LEAF,)), Forest((LEAF,))) == two_dots
    g, h = parse_forest("[[][]]"), parse_forest("[[[]]]*[]")
    assert g * h == h * g


def test_b_plus_examples(two_dots):
    assert b_plus(UNIT) == LEAF
    assert b_plus(Forest((LEAF,))) == ladder(2)
    assert b_plus(two_dots).encoding == "[[][]]"


def test_b_minus_examples(two_dots):
    assert b_minus(LEAF) == UNIT
    assert b_minus(parse_tree("[[][]]")) == two_dots
    assert b_minus(ladder(3)) == Forest((ladder(2),))


def test_enumerate_small():
    assert enumerate_forests(0) == (UNIT,)
    assert enumerate_forests(1) == (Forest((LEAF,)),)
    assert len(enumerate_forests(2)) == 2
    assert len(enumerate_forests(4)) == 9


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_brute_force(n):
    forests_n = enumerate_forests(n)
    assert len(set(forests_n)) == len(forests_n)
    assert all(f.degree == n for f in forests_n)
    assert len(forests_n) == _brute_force_tree_count(n + 1)


def test_enumeration_is_sorted():
    for n in range(6):
        fs = list(enumerate_forests(n))
        assert fs == sorted(fs)


@pytest.mark.parametrize("n", range(0, 7))
def test_b_plus_b_minus_bijection(n):
    for f in enumerate_forests(n):
        assert b_minus(b_plus(f)) == f
    for t in enumerate_trees(n + 1):
        assert b_plus(b_minus(t)) == t


def _shuffled(raw, rng):
    kids = [_shuffled(k, rng) for k in raw]
    rng.shuffle(kids)
    return kids


@given(raw_trees, st.randoms(use_true_random=False))
def test_canonicalize_invariant_under_permutation(raw, rng):
    t = canonicalize(raw)
    assert canonicalize(_shuffled(raw, rng)) == t
    assert canonicalize(t) == t
    assert parse_tree(t.encoding) == t


@given(forests(), forests())
def test_degree_additive(f, g):
    assert (f * g).degree == f.degree + g.degree


def test_text_round_trip():
    for n in range(5):
        for f in enumerate_forests(n):
            assert parse_forest(f.encoding) == f
    assert parse_forest("I") == UNIT
    assert parse_forest("[] * [[]]") == parse_forest("[[]]*[]")


@pytest.mark.parametrize("text,pos", [("[[]", 3), ("[]x", 2), ("[]*", 3), ("][", 0)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_forest(text)
    assert err.value.position == pos


def test_deep_ladder_parses():
    t = ladder(3000)
    assert parse_tree(t.encoding).degree == 3000
