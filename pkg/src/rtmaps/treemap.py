"""Rooted tree (forest) maps on Q<x,y> and the companion operators psi_f, phi_f.

A forest ``f`` acts on words by

* ``f(x) = xy``, ``f(y) = -xy`` for the single node,
* ``B+(g)(u) = R_y R_{x+2y} R_y^-1 g(u)`` on letters,
* ``(gh)(u) = g(h(u))`` on letters,
* ``f(wu) = sum a(w) b(u)`` over the coproduct terms ``a (x) b`` of ``f``,

with ``f(1) = 0`` for ``f != I`` and ``I`` acting as the identity.
"""
from __future__ import annotations

from functools import lru_cache
from .forest import LEAF, Forest, Tree, b_minus
from .hopf import coproduct
from .linear import LinComb
from .words import (
    Poly,
    WordOperator,
    r_y_inverse,
    words_of_weight,
)

__all__ = [
    "TreeMap",
    "PhiOp",
    "letter_image",
    "apply",
    "tree_map",
    "psi",
    "phi",
    "commutator_test",
    "comultiplicativity_test",
    "words_up_to",
]

_DOT = Forest((LEAF,))
_X_PLUS_2Y = Poly({"x": 1, "y": 2})


def _as_forest(f: Forest | Tree) -> Forest:
    return Forest((f,)) if isinstance(f, Tree) else f


def letter_image(f: Forest | Tree, u: str, split: int | None = None) -> Poly:
    """f(u) for a letter ``u``.

    For a forest with several trees, ``split`` picks which tree is peeled off as
    the outer map ``g`` in ``g(h(u))``; the default is the first (smallest) tree.
    """
    if u not in ("x", "y"):
        raise ValueError(f"not a letter: {u!r}")
    f = _as_forest(f)
    if split is None:
        return _letter_image(f, u)
    if not 0 <= split < len(f.trees):
        raise IndexError("split index out of range")
    g = Forest((f.trees[split],))
    h = Forest(f.trees[:split] + f.trees[split + 1 :])
    return apply(g, _letter_image(h, u))


@lru_cache(maxsize=None)
def _letter_image(f: Forest, u: str) -> Poly:
    if f.is_unit:
        return Poly.word(u)
    if f == _DOT:
        return Poly.word("xy", 1 if u == "x" else -1)
    if f.is_tree:
        inner = _letter_image(b_minus(f.trees[0]), u)
        # inner lies in xHy, so stripping the last y is always defined
        return r_y_inverse(inner) * _X_PLUS_2Y * Poly.word("y")
    g = Forest(f.trees[:1])
    h = Forest(f.trees[1:])
    return apply(g, _letter_image(h, u))


@lru_cache(maxsize=1 << 20)
def _image(f: Forest, w: str) -> Poly:
    if f.is_unit:
        return Poly.word(w)
    if not w:
        return Poly.zero()
    if len(w) == 1:
        return _letter_image(f, w)
    head, u = w[:-1], w[-1]
    acc: dict = {}
    for (a, b), c in coproduct(f).items():
        left = _image(a, head)
        if not left:
            continue
        right = _letter_image(b, u)
        for v, d in left.items():
            for s, e in right.items():
                LinComb.accumulate(acc, v + s, c * d * e)
    return Poly._raw(acc)


def apply(f: Forest | Tree, p: Poly | str) -> Poly:
    """Evaluate the forest map ``f`` on a polynomial (or a single word)."""
    f = _as_forest(f)
    if isinstance(p, str):
        return _image(f, p)
    acc: dict = {}
    for w, c in p.items():
        for v, d in _image(f, w).items():
            LinComb.accumulate(acc, v, c * d)
    return Poly(acc)


def tree_map(f: Forest | Tree) -> WordOperator:
    f = _as_forest(f)
    return WordOperator(lambda w: _image(f, w), f.encoding)


class TreeMap:
    """A forest together with its letter images."""

    __slots__ = ("forest", "x_image", "y_image")

    def __init__(self, f: Forest | Tree):
        self.forest = _as_forest(f)
        self.x_image = _letter_image(self.forest, "x")
        self.y_image = _letter_image(self.forest, "y")

    def __call__(self, p: Poly | str) -> Poly:
        return apply(self.forest, p)

    @property
    def degree(self) -> int:
        return self.forest.degree

    def __repr__(self) -> str:
        return f"TreeMap({self.forest.encoding})"


def psi(f: Forest | Tree) -> WordOperator:
    """psi_f = [f, R_x], i.e. w -> f(wx) - f(w)x."""
    f = _as_forest(f)
    if f.is_unit:
        return WordOperator(lambda w: Poly.zero(), "psi[I]")
    return WordOperator(lambda w: _image(f, w + "x") - _image(f, w) * Poly.word("x"), f"psi[{f}]")


class PhiOp(LinComb[tuple[int, tuple[Tree, ...]]]):
    """phi_f as a polynomial in R_z and tree maps.

    A monomial is ``(k, (t1, ..., tm))`` standing for ``R_z^k t1 ... tm``. All
    factors commute (tree maps commute with each other and with R_z), so each
    monomial is stored with its trees sorted.
    """

    __slots__ = ()

    @staticmethod
    def order_key(key):
        k, trees = key
        return (k, tuple(t.sort_key for t in trees))

    @classmethod
    def identity(cls) -> "PhiOp":
        return cls.basis((0, ()))

    @classmethod
    def rz(cls) -> "PhiOp":
        return cls.basis((1, ()))

    @classmethod
    def forest(cls, f: Forest) -> "PhiOp":
        return cls.basis((0, f.trees))

    def __mul__(self, other):
        # composition
        if isinstance(other, PhiOp):
            acc: dict = {}
            for (k1, t1), c in self.terms.items():
                for (k2, t2), d in other.terms.items():
                    key = (k1 + k2, Forest(t1 + t2).trees)
                    self.accumulate(acc, key, c * d)
            return PhiOp._raw(acc)
        return NotImplemented

    def degrees(self) -> set[int]:
        """Total degree of each monomial, R_z counting 1 and a tree its node count."""
        return {k + sum(t.degree for t in trees) for k, trees in self.terms}

    def __call__(self, p: Poly | str) -> Poly:
        if isinstance(p, str):
            p = Poly.word(p)
        out = Poly.zero()
        for (k, trees), c in self.terms.items():
            v = apply(Forest(trees), p)
            for _ in range(k):
                v = v * Poly({"x": 1, "y": 1})
            out = out + v.scale(c)
        return out

    def as_operator(self) -> WordOperator:
        return WordOperator(lambda w: self(w), f"phi{self!s}")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for (k, trees), c in self.sorted_items():
            body = ".".join(["Rz"] * k + [t.encoding for t in trees]) or "id"
            mag = abs(c)
            term = body if mag == 1 else f"{mag} {body}"
            if not out:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" {'+' if c > 0 else '-'} {term}"
        return out

    def __repr__(self) -> str:
        return f"PhiOp({self})"


@lru_cache(maxsize=None)
def _phi(f: Forest) -> PhiOp:
    if f.is_unit:
        return PhiOp.zero()
    if f.is_tree:
        # phi_{B+(g)} = g + R_z phi_g; for the single node this is the identity
        g = b_minus(f.trees[0])
        return PhiOp.forest(g) + PhiOp.rz() * _phi(g)
    return _phi_split(f, 0)


def _phi_split(f: Forest, split: int) -> PhiOp:
    g = Forest((f.trees[split],))
    h = Forest(f.trees[:split] + f.trees[split + 1 :])
    pg, ph = _phi(g), _phi(h)
    return PhiOp.forest(g) * ph + pg * PhiOp.forest(h) - pg * PhiOp.rz() * ph


def phi(f: Forest | Tree, split: int | None = None) -> PhiOp:
    """phi_f with psi_f = R_y phi_f R_x, by structural recursion on ``f``."""
    f = _as_forest(f)
    if split is None or f.is_unit or f.is_tree:
        return _phi(f)
    return _phi_split(f, split)


def words_up_to(max_weight: int) -> list[str]:
    return [w for n in range(max_weight + 1) for w in words_of_weight(n)]


def commutator_test(f: Forest | Tree, g: Forest | Tree, max_weight: int) -> bool:
    """f(g(w)) == g(f(w)) for every word of weight <= max_weight."""
    f, g = _as_forest(f), _as_forest(g)
    return all(apply(f, _image(g, w)) == apply(g, _image(f, w)) for w in words_up_to(max_weight))


def comultiplicativity_test(f: Forest | Tree, v: str, w: str) -> bool:
    """f(vw) == M(Delta(f)(v (x) w))."""
    f = _as_forest(f)
    rhs = Poly.zero()
    for (a, b), c in coproduct(f).items():
        rhs = rhs + (_image(a, v) * _image(b, w)).scale(c)
    return _image(f, v + w) == rhs
