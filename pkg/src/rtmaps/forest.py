"""Non-planar rooted trees and forests.

Trees are stored canonically: children are sorted by a fixed total order on
their bracket encodings, so two isomorphic trees always have the same
encoding. A leaf is ``[]``, a node is ``[`` + sorted child encodings + ``]``.
Forests are sorted tuples of trees; the empty forest is the unit ``I``.

The order used everywhere compares encodings lexicographically with ``]``
ranked before ``[``.  This puts a leaf before any larger tree (``[]`` before
``[[]]``), which is the "leaf-first" convention used for serialization.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Tree",
    "Forest",
    "ParseError",
    "LEAF",
    "UNIT",
    "canonicalize",
    "forest_product",
    "b_plus",
    "b_minus",
    "enumerate_forests",
    "enumerate_trees",
    "parse_tree",
    "parse_forest",
    "ladder",
]

_ORDER = str.maketrans("[]", "10")


def _sort_key(encoding: str) -> str:
    return encoding.translate(_ORDER)


class ParseError(ValueError):
    """Malformed tree or forest text; ``position`` is the offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Tree:
    """A canonical non-planar rooted tree.

    Construct through :func:`canonicalize`, :func:`b_plus` or :func:`parse_tree`;
    the constructor sorts the children itself, so ``Tree(children)`` is always
    canonical as long as the children are.
    """

    __slots__ = ("children", "encoding", "degree", "_key", "_hash")

    def __init__(self, children: Iterable["Tree"] = ()):
        kids = tuple(sorted(children, key=lambda t: t._key))
        self.children: tuple[Tree, ...] = kids
        self.encoding: str = "[" + "".join(c.encoding for c in kids) + "]"
        self.degree: int = 1 + sum(c.degree for c in kids)
        self._key = _sort_key(self.encoding)
        self._hash = hash(self.encoding)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Tree") -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        return f"Tree({self.encoding!r})"

    def __str__(self) -> str:
        return self.encoding

    @property
    def sort_key(self) -> str:
        return self._key


class Forest:
    """A finite multiset of trees, the empty multiset being the unit ``I``."""

    __slots__ = ("trees", "encoding", "degree", "_key", "_hash")

    def __init__(self, trees: Iterable[Tree] = ()):
        ts = tuple(sorted(trees, key=lambda t: t._key))
        self.trees: tuple[Tree, ...] = ts
        self.encoding: str = "*".join(t.encoding for t in ts) if ts else "I"
        self.degree: int = sum(t.degree for t in ts)
        self._key = tuple(t._key for t in ts)
        self._hash = hash(self.encoding)

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        return cls(trees)

    @property
    def is_unit(self) -> bool:
        return not self.trees

    @property
    def is_tree(self) -> bool:
        return len(self.trees) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Forest") -> bool:
        return self._key < other._key

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __mul__(self, other: "Forest") -> "Forest":
        return forest_product(self, other)

    def __repr__(self) -> str:
        return f"Forest({self.encoding!r})"

    def __str__(self) -> str:
        return self.encoding

    @property
    def sort_key(self) -> tuple[str, ...]:
        return self._key


LEAF = Tree()
UNIT = Forest()


def canonicalize(raw) -> Tree:
    """Canonical tree from a raw nested structure.

    ``raw`` is either a :class:`Tree` (children possibly built elsewhere) or a
    nested sequence whose items are the children, e.g. ``[[], [[]]]`` is a root
    with a leaf and a ladder of length 2 below it.
    """
    if isinstance(raw, Tree):
        return Tree(canonicalize(c) for c in raw.children)
    return Tree(canonicalize(c) for c in raw)


def forest_product(a: Forest, b: Forest) -> Forest:
    """Disjoint union of two forests."""
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    return Forest(a.trees + b.trees)


def b_plus(f: Forest) -> Tree:
    """Graft the roots of ``f`` onto a new common root."""
    return Tree(f.trees)


def b_minus(t: Tree) -> Forest:
    """The forest of root subtrees; inverse of :func:`b_plus`."""
    return Forest(t.children)


def ladder(n: int) -> Tree:
    """The chain of ``n`` nodes."""
    if n < 1:
        raise ValueError("a ladder needs at least one node")
    t = LEAF
    for _ in range(n - 1):
        t = Tree((t,))
    return t


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees with ``n`` nodes, via the grafting bijection with forests of n-1 nodes."""
    if n < 1:
        return ()
    return tuple(b_plus(f) for f in enumerate_forests(n - 1))


def _multisets(items: Sequence[Tree], k: int, start: int = 0) -> Iterator[tuple[Tree, ...]]:
    if k == 0:
        yield ()
        return
    for i in range(start, len(items)):
        for rest in _multisets(items, k - 1, i):
            yield (items[i],) + rest


def _partitions(n: int, largest: int) -> Iterator[dict[int, int]]:
    # partitions of n into parts <= largest, as {part: multiplicity}
    if n == 0:
        yield {}
        return
    for part in range(min(n, largest), 0, -1):
        for mult in range(n // part, 0, -1):
            for rest in _partitions(n - part * mult, part - 1):
                yield {part: mult, **rest}


@lru_cache(maxsize=None)
def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """Every forest with ``n`` nodes exactly once, sorted by forest order.

    A forest of degree n is chosen by a partition of n (tree sizes) and, for each
    part size, a multiset of trees of that size.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return (UNIT,)
    out: list[Forest] = []
    for parts in _partitions(n, n):
        choices: list[list[tuple[Tree, ...]]] = [
            list(_multisets(enumerate_trees(size), mult)) for size, mult in parts.items()
        ]
        stack: list[tuple[Tree, ...]] = [()]
        for options in choices:
            stack = [acc + pick for acc in stack for pick in options]
        out.extend(Forest(ts) for ts in stack)
    out.sort()
    return tuple(out)


def parse_tree(text: str) -> Tree:
    """Parse a bracket encoding such as ``[[][]]``; output is canonical."""
    tree, end = _parse_tree_at(text, 0)
    if end != len(text):
        raise ParseError("trailing characters after tree", end)
    return tree


def _parse_tree_at(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expected '['", pos)
    # iterative to avoid recursion limits on long ladders
    stack: list[list[Tree]] = [[]]
    pos += 1
    while True:
        if pos >= len(text):
            raise ParseError("unbalanced brackets", pos)
        ch = text[pos]
        if ch == "[":
            stack.append([])
        elif ch == "]":
            kids = stack.pop()
            node = Tree(kids)
            if not stack:
                return node, pos + 1
            stack[-1].append(node)
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1


def parse_forest(text: str) -> Forest:
    """Parse ``I`` or trees joined by ``*`` (whitespace around ``*`` allowed)."""
    stripped = text.strip()
    if stripped in ("I", "1", ""):
        return UNIT
    trees = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        tree, pos = _parse_tree_at(text, pos)
        trees.append(tree)
        while pos < n and text[pos].isspace():
            pos += 1
        if pos == n:
            break
        if text[pos] != "*":
            raise ParseError(f"expected '*' between trees, got {text[pos]!r}", pos)
        pos += 1
    return Forest(trees)
