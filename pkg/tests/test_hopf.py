import itertools
from collections import Counter
from math import factorial

import pytest
from hypothesis import given

from rtmaps.forest import LEAF, UNIT, Forest, Tree, canonicalize, enumerate_forests, ladder, parse_forest, parse_tree
from rtmaps.hopf import ForestSum, TensorSum, antipode, coproduct, counit, delta_k, natural_growth

from conftest import forests


# --- admissible-cut oracle on plain nested lists -------------------------------

def _nodes(raw, path=()):
    yield path
    for i, child in enumerate(raw):
        yield from _nodes(child, path + (i,))


def _subtree(raw, path):
    for i in path:
        raw = raw[i]
    return raw


def _prune(raw, cut, path=()):
    return [_prune(c, cut, path + (i,)) for i, c in enumerate(raw) if path + (i,) not in cut]


def _cut_coproduct(raw) -> Counter:
    """Sum over antichains C of nodes: (subtrees at C) (x) (what stays attached to the root)."""
    nodes = list(_nodes(raw))
    out = Counter()
    for r in range(len(nodes) + 1):
        for cut in itertools.combinations(nodes, r):
            if any(a != b and b[: len(a)] == a for a in cut for b in cut):
                continue
            left = Forest(tuple(canonicalize(_subtree(raw, p)) for p in cut))
            right = UNIT if () in cut else Forest((canonicalize(_prune(raw, set(cut))),))
            out[(left, right)] += 1
    return out


def _to_raw(t: Tree):
    return [_to_raw(c) for c in t.children]


def _oracle_forest_coproduct(f: Forest) -> Counter:
    acc = Counter({(UNIT, UNIT): 1})
    for t in f.trees:
        nxt = Counter()
        for (a, b), c in acc.items():
            for (p, q), d in _cut_coproduct(_to_raw(t)).items():
                nxt[(a * p, b * q)] += c * d
        acc = nxt
    return acc


@pytest.mark.parametrize("n", range(0, 6))
def test_coproduct_matches_cut_oracle(n):
    for f in enumerate_forests(n):
        assert dict(coproduct(f).items()) == dict(_oracle_forest_coproduct(f)), f.encoding


def test_coproduct_worked_examples():
    dot, two = Forest((LEAF,)), Forest((LEAF, LEAF))
    lad = Forest((ladder(2),))
    assert coproduct(UNIT) == TensorSum.basis((UNIT, UNIT))
    assert coproduct(dot) == TensorSum({(dot, UNIT): 1, (UNIT, dot): 1})
    assert coproduct(lad) == TensorSum({(lad, UNIT): 1, (UNIT, lad): 1, (dot, dot): 1})
    assert coproduct(two) == TensorSum({(two, UNIT): 1, (UNIT, two): 1, (dot, dot): 2})


@given(forests(0, 3), forests(0, 3))
def test_coproduct_multiplicative(f, g):
    assert coproduct(f * g) == coproduct(f) * coproduct(g)


def _left(f):
    acc: dict = {}
    for (a, b), c in coproduct(f).items():
        for (p, q), d in coproduct(a).items():
            TensorSum.accumulate(acc, (p, q, b), c * d)
    return acc


def _right(f):
    acc: dict = {}
    for (a, b), c in coproduct(f).items():
        for (p, q), d in coproduct(b).items():
            TensorSum.accumulate(acc, (a, p, q), c * d)
    return acc


@pytest.mark.parametrize("n", range(0, 5))
def test_coassociative(n):
    for f in enumerate_forests(n):
        assert _left(f) == _right(f)


@given(forests(0, 4))
def test_counit_laws(f):
    left = ForestSum.zero()
    right = ForestSum.zero()
    for (a, b), c in coproduct(f).items():
        left = left + ForestSum.of(b, c * counit(a))
        right = right + ForestSum.of(a, c * counit(b))
    assert left == ForestSum.of(f) == right


def test_counit_values():
    assert counit(UNIT) == 1
    assert counit(Forest((LEAF,))) == 0
    assert counit(ForestSum({UNIT: 3, Forest((LEAF,)): 2})) == 3


def test_antipode_examples():
    dot, two = Forest((LEAF,)), Forest((LEAF, LEAF))
    lad = Forest((ladder(2),))
    assert antipode(UNIT) == ForestSum.of(UNIT)
    assert antipode(dot) == ForestSum.of(dot, -1)
    assert antipode(two) == ForestSum.of(two)
    assert antipode(lad) == ForestSum({lad: -1, two: 1})


@pytest.mark.parametrize("n", range(0, 6))
def test_antipode_axiom_both_sides(n):
    for f in enumerate_forests(n):
        left = ForestSum.zero()
        right = ForestSum.zero()
        for (a, b), c in coproduct(f).items():
            left = left + (antipode(a) * ForestSum.of(b)).scale(c)
            right = right + (ForestSum.of(a) * antipode(b)).scale(c)
        expected = ForestSum.of(UNIT, counit(f))
        assert left == expected and right == expected, f.encoding


@given(forests(0, 3), forests(0, 3))
def test_antipode_multiplicative(f, g):
    # commutative Hopf algebra: S is an algebra morphism
    assert antipode(f * g) == antipode(f) * antipode(g)


def test_natural_growth_examples():
    lad = Forest((ladder(2),))
    cherry = parse_forest("[[][]]")
    assert natural_growth(UNIT) == ForestSum.of(Forest((LEAF,)))
    assert natural_growth(Forest((LEAF,))) == ForestSum.of(lad)
    assert natural_growth(lad) == ForestSum({cherry: 1, Forest((ladder(3),)): 1})


def _ahu(t: Tree) -> str:
    return "(" + "".join(sorted(_ahu(c) for c in t.children)) + ")"


def _delta_oracle(k: int) -> Counter:
    # trees as parent arrays, grown one labelled leaf at a time
    layer = [[-1]]
    for _ in range(k - 1):
        layer = [p + [v] for p in layer for v in range(len(p))]

    def code(parent, v=0):
        return "(" + "".join(sorted(code(parent, c) for c, q in enumerate(parent) if q == v and c)) + ")"

    return Counter(code(p) for p in layer)


@pytest.mark.parametrize("k", range(1, 7))
def test_delta_matches_labelled_growth(k):
    d = delta_k(k)
    assert Counter({_ahu(f.trees[0]): c for f, c in d.items()}) == _delta_oracle(k)
    assert sum(c for _, c in d.items()) == factorial(k - 1)


def test_delta_four():
    d = delta_k(4)
    assert d == ForestSum({
        parse_forest("[[][[]]]"): 3,
        parse_forest("[[][][]]"): 1,
        parse_forest("[[[][]]]"): 1,
        parse_forest("[[[[]]]]"): 1,
    })


def test_json_round_trip():
    f = parse_forest("[[][]]*[]")
    assert TensorSum.from_json(coproduct(f).to_json()) == coproduct(f)
    assert ForestSum.from_json(antipode(f).to_json()) == antipode(f)


def test_tree_and_forest_inputs_agree():
    t = parse_tree("[[][]]")
    assert coproduct(t) == coproduct(Forest((t,)))
