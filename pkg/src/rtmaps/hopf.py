"""The Connes-Kreimer Hopf algebra of rooted forests over Q.

Coproduct, counit and antipode are computed from their recursive
definitions; nothing here uses floating point.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .forest import LEAF, UNIT, Forest, Tree, b_minus, b_plus, forest_product, parse_forest
from .linear import LinComb, format_rational, parse_rational

__all__ = [
    "ForestSum",
    "TensorSum",
    "coproduct",
    "counit",
    "antipode",
    "natural_growth",
    "delta_k",
    "graft_leaf_everywhere",
]


class ForestSum(LinComb[Forest]):
    """An element of H: rational combination of forests."""

    __slots__ = ()

    @staticmethod
    def order_key(key: Forest):
        return (key.degree, key.sort_key)

    @classmethod
    def of(cls, f: Forest | Tree, coeff=1) -> "ForestSum":
        if isinstance(f, Tree):
            f = Forest((f,))
        return cls.basis(f, coeff)

    def __mul__(self, other):
        if isinstance(other, ForestSum):
            acc: dict = {}
            for f, c in self.terms.items():
                for g, d in other.terms.items():
                    self.accumulate(acc, forest_product(f, g), c * d)
            return ForestSum(acc)
        return NotImplemented

    def homogeneous(self, degree: int) -> "ForestSum":
        return ForestSum._raw({f: c for f, c in self.terms.items() if f.degree == degree})

    def to_json(self) -> list[list[str]]:
        return [[format_rational(c), f.encoding] for f, c in self.sorted_items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[str]]) -> "ForestSum":
        return cls((parse_forest(enc), parse_rational(c)) for c, enc in data)

    def __repr__(self) -> str:
        return f"ForestSum({self.to_json()})"


class TensorSum(LinComb[tuple[Forest, Forest]]):
    """An element of H (x) H keyed by ordered forest pairs."""

    __slots__ = ()

    @staticmethod
    def order_key(key):
        a, b = key
        return (a.degree, a.sort_key, b.degree, b.sort_key)

    def __mul__(self, other):
        # componentwise: (a (x) b)(c (x) d) = ac (x) bd
        if isinstance(other, TensorSum):
            acc: dict = {}
            for (a, b), c in self.terms.items():
                for (p, q), d in other.terms.items():
                    self.accumulate(acc, (forest_product(a, p), forest_product(b, q)), c * d)
            return TensorSum(acc)
        return NotImplemented

    def to_json(self) -> list[list[str]]:
        return [[format_rational(c), a.encoding, b.encoding] for (a, b), c in self.sorted_items()]

    @classmethod
    def from_json(cls, data) -> "TensorSum":
        return cls(((parse_forest(a), parse_forest(b)), parse_rational(c)) for c, a, b in data)

    def __repr__(self) -> str:
        return f"TensorSum({self.to_json()})"


@lru_cache(maxsize=None)
def _tree_coproduct(t: Tree) -> TensorSum:
    # Delta(B+(f)) = B+(f) (x) I + (id (x) B+) Delta(f)
    tf = Forest((t,))
    acc: dict = {(tf, UNIT): 1}
    for (a, b), c in coproduct(b_minus(t)).items():
        LinComb.accumulate(acc, (a, Forest((b_plus(b),))), c)
    return TensorSum(acc)


@lru_cache(maxsize=None)
def _forest_coproduct(f: Forest) -> TensorSum:
    out = TensorSum.basis((UNIT, UNIT))
    for t in f.trees:
        out = out * _tree_coproduct(t)
    return out


def coproduct(f: Forest | Tree) -> TensorSum:
    """Delta(f), multiplicative over the trees of ``f``."""
    if isinstance(f, Tree):
        return _tree_coproduct(f)
    if f.is_tree:
        return _tree_coproduct(f.trees[0])
    return _forest_coproduct(f)


def counit(v: ForestSum | Forest) -> int:
    if isinstance(v, Forest):
        return 1 if v.is_unit else 0
    return v.coeff(UNIT)


@lru_cache(maxsize=None)
def antipode(f: Forest) -> ForestSum:
    """S(f) = -f - sum S(a) b over the Sweedler terms other than f(x)I and I(x)f."""
    if f.is_unit:
        return ForestSum.of(UNIT)
    out = -ForestSum.of(f)
    for (a, b), c in coproduct(f).items():
        if a.is_unit or b.is_unit:
            continue
        out = out - (antipode(a) * ForestSum.of(b)).scale(c)
    return out


def graft_leaf_everywhere(t: Tree) -> list[Tree]:
    """``t`` with one extra leaf grafted onto each node in turn (with repetition)."""
    out = [Tree(t.children + (LEAF,))]
    kids = t.children
    for i, child in enumerate(kids):
        rest = kids[:i] + kids[i + 1 :]
        for grown in graft_leaf_everywhere(child):
            out.append(Tree(rest + (grown,)))
    return out


def _grow_forest(f: Forest) -> dict:
    if f.is_unit:
        return {Forest((LEAF,)): 1}
    acc: dict = {}
    trees = f.trees
    # Leibniz rule across the trees of the product
    for i, t in enumerate(trees):
        rest = trees[:i] + trees[i + 1 :]
        for grown in graft_leaf_everywhere(t):
            LinComb.accumulate(acc, Forest(rest + (grown,)), 1)
    return acc


def natural_growth(v: ForestSum | Forest) -> ForestSum:
    """The natural growth operator N, extended linearly."""
    if isinstance(v, Forest):
        v = ForestSum.of(v)
    acc: dict = {}
    for f, c in v.items():
        for g, d in _grow_forest(f).items():
            LinComb.accumulate(acc, g, c * d)
    return ForestSum(acc)


@lru_cache(maxsize=None)
def delta_k(k: int) -> ForestSum:
    """N^k applied to the unit forest."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ForestSum.of(UNIT)
    return natural_growth(delta_k(k - 1))
