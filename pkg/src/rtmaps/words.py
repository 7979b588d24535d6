"""Exact arithmetic in Q<x,y>.

Words are plain ``str`` over ``"xy"``; the empty string is the word 1 and is
written ``"1"`` in text. Polynomials are :class:`Poly`. Linear operators on
polynomials are :class:`WordOperator`, built from a function on single words.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import product as _cartesian
from typing import Callable, Iterable, Iterator, Sequence

from .linear import LinComb, format_rational, parse_rational

__all__ = [
    "DomainError",
    "NotAdmissible",
    "Poly",
    "WordOperator",
    "MzvIndex",
    "X",
    "Y",
    "Z",
    "ONE",
    "concat",
    "r_op",
    "l_op",
    "r_y_inverse",
    "l_x_inverse",
    "phi_auto",
    "tau_anti",
    "chi_x",
    "chi_x_inverse",
    "index_to_word",
    "word_to_index",
    "words_of_weight",
    "admissible_words",
    "hy_words",
    "parse_word",
    "word_text",
]


class DomainError(ValueError):
    """An argument lies outside the subspace an operation is defined on."""


class NotAdmissible(DomainError):
    """An MZV index with k1 = 1 (or a word not starting with x)."""


def word_order(w: str) -> tuple[int, str]:
    """Weight first, then lexicographic with x < y."""
    return (len(w), w)


def parse_word(text: str) -> str:
    text = text.strip()
    if text == "1":
        return ""
    for i, ch in enumerate(text):
        if ch not in "xy":
            raise DomainError(f"word may only contain 'x' and 'y': {ch!r} at position {i}")
    return text


def word_text(w: str) -> str:
    return w if w else "1"


_TERM = re.compile(r"\s*(?P<sign>[+-]?)\s*(?:(?P<num>\d+(?:/\d+)?)\s+)?(?P<word>[xy]+|1)\s*")


class Poly(LinComb[str]):
    """Element of Q<x,y>; ``*`` is concatenation, ``c * p`` scales."""

    __slots__ = ()

    order_key = staticmethod(word_order)

    @classmethod
    def word(cls, w: str, coeff=1) -> "Poly":
        return cls.basis(w, coeff)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse ``"xy - 2 xxy + 1/3 y"`` style sums (the inverse of ``str``)."""
        s = text.replace("−", "-").strip()
        if s == "0":
            return cls.zero()
        acc: dict = {}
        for m in _TERM.finditer(s):
            if not m.group(0).strip():
                continue
            sign, num, word = m.group("sign"), m.group("num"), m.group("word")
            c = parse_rational(num) if num else 1
            if sign == "-":
                c = -c
            cls.accumulate(acc, parse_word(word), c)
        if _TERM.sub("", s).strip():
            raise DomainError(f"cannot parse polynomial {text!r}")
        return cls(acc)

    def __mul__(self, other):
        if isinstance(other, Poly):
            acc: dict = {}
            for v, c in self.terms.items():
                for w, d in other.terms.items():
                    self.accumulate(acc, v + w, c * d)
            return Poly._raw(acc)
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def weights(self) -> set[int]:
        return {len(w) for w in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def in_h1(self) -> bool:
        return all(w == "" or w[-1] == "y" for w in self.terms)

    def in_h0(self) -> bool:
        return all(w == "" or (w[0] == "x" and w[-1] == "y") for w in self.terms)

    def in_xhy(self) -> bool:
        return all(len(w) >= 2 and w[0] == "x" and w[-1] == "y" for w in self.terms)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(c), word_text(w)] for w, c in self.sorted_items()]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls((parse_word(w), parse_rational(c)) for c, w in data)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.sorted_items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = word_text(w) if mag == 1 else f"{mag} {word_text(w)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


ONE = Poly.word("")
X = Poly.word("x")
Y = Poly.word("y")
Z = Poly({"x": 1, "y": 1})


def _as_poly(p: Poly | str) -> Poly:
    return Poly.word(p) if isinstance(p, str) else p


class WordOperator:
    """A Q-linear map on Q<x,y> given by its values on words.

    ``A @ B`` composes (B first), ``A + B``, ``A - B``, ``c * A`` are pointwise.
    Calling on a ``str`` treats it as a single word.
    """

    __slots__ = ("on_word", "name")

    def __init__(self, on_word: Callable[[str], Poly], name: str = "op"):
        self.on_word = on_word
        self.name = name

    def __call__(self, p: Poly | str) -> Poly:
        if isinstance(p, str):
            return self.on_word(p)
        acc: dict = {}
        for w, c in p.items():
            for v, d in self.on_word(w).items():
                LinComb.accumulate(acc, v, c * d)
        return Poly(acc)

    def __matmul__(self, other: "WordOperator") -> "WordOperator":
        return WordOperator(lambda w: self(other.on_word(w)), f"{self.name}.{other.name}")

    def __add__(self, other: "WordOperator") -> "WordOperator":
        return WordOperator(lambda w: self.on_word(w) + other.on_word(w), f"({self.name}+{other.name})")

    def __sub__(self, other: "WordOperator") -> "WordOperator":
        return WordOperator(lambda w: self.on_word(w) - other.on_word(w), f"({self.name}-{other.name})")

    def __neg__(self) -> "WordOperator":
        return WordOperator(lambda w: -self.on_word(w), f"-{self.name}")

    def __rmul__(self, c) -> "WordOperator":
        return WordOperator(lambda w: self.on_word(w).scale(c), f"{c}{self.name}")

    def __repr__(self) -> str:
        return f"WordOperator({self.name})"

    def agrees_with(self, other: "WordOperator", words: Iterable[str]) -> bool:
        return all(self.on_word(w) == other.on_word(w) for w in words)


IDENTITY = WordOperator(Poly.word, "id")


def concat(v: Poly, w: Poly) -> Poly:
    return _as_poly(v) * _as_poly(w)


def r_op(p: Poly | str) -> WordOperator:
    """Right concatenation by ``p``."""
    p = _as_poly(p)
    return WordOperator(lambda w: Poly.word(w) * p, f"R[{p}]")


def l_op(p: Poly | str) -> WordOperator:
    """Left concatenation by ``p``."""
    p = _as_poly(p)
    return WordOperator(lambda w: p * Poly.word(w), f"L[{p}]")


def r_y_inverse(p: Poly | str) -> Poly:
    """Strip the final ``y`` of every word; defined on Q<x,y>y only."""
    p = _as_poly(p)
    out = {}
    for w, c in p.items():
        if not w or w[-1] != "y":
            raise DomainError(f"R_y^-1 undefined on word {word_text(w)!r}")
        out[w[:-1]] = c
    return Poly._raw(out)


def l_x_inverse(p: Poly | str) -> Poly:
    """Strip the leading ``x`` of every word; defined on xQ<x,y> only."""
    p = _as_poly(p)
    out = {}
    for w, c in p.items():
        if not w or w[0] != "x":
            raise DomainError(f"L_x^-1 undefined on word {word_text(w)!r}")
        out[w[1:]] = c
    return Poly._raw(out)


@lru_cache(maxsize=1 << 16)
def _phi_word(w: str) -> Poly:
    # x -> x + y, y -> -y, multiplicatively
    if not w:
        return ONE
    n_y = w.count("y")
    sign = -1 if n_y % 2 else 1
    slots = [("x", "y") if ch == "x" else ("y",) for ch in w]
    return Poly._raw({"".join(letters): sign for letters in _cartesian(*slots)})


def phi_auto(p: Poly | str) -> Poly:
    """The automorphism x -> x + y, y -> -y."""
    if isinstance(p, str):
        return _phi_word(p)
    return WordOperator(_phi_word)(p)


_SWAP = str.maketrans("xy", "yx")


def _tau_word(w: str) -> str:
    return w[::-1].translate(_SWAP)


def tau_anti(p: Poly | str) -> Poly:
    """The anti-automorphism swapping x and y (reverse, then swap letters)."""
    return _as_poly(p).map_keys(_tau_word)


def chi_x(p: Poly | str) -> Poly:
    """tau . L_x . phi."""
    return tau_anti(l_op("x")(phi_auto(p)))


def chi_x_inverse(p: Poly | str) -> Poly:
    """phi . tau . R_y^-1; needs every word to end in y."""
    return phi_auto(tau_anti(r_y_inverse(p)))


PHI = WordOperator(_phi_word, "phi")
TAU = WordOperator(lambda w: Poly.word(_tau_word(w)), "tau")
CHI_X = WordOperator(lambda w: chi_x(w), "chi_x")


class MzvIndex(tuple):
    """A composition (k1, ..., kr) of positive integers."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(k) for k in parts)
        if not parts:
            raise ValueError("an index needs at least one part")
        if any(k < 1 for k in parts):
            raise ValueError(f"index parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def depth(self) -> int:
        return len(self)

    @property
    def admissible(self) -> bool:
        return self[0] >= 2

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"MzvIndex({str(self)})"

    @classmethod
    def parse(cls, text: str) -> "MzvIndex":
        return cls(int(s) for s in text.replace("(", "").replace(")", "").split(","))


def index_to_word(i: Sequence[int]) -> str:
    """(k1, ..., kr) -> x^(k1-1) y ... x^(kr-1) y."""
    return "".join("x" * (k - 1) + "y" for k in MzvIndex(i))


def word_to_index(w: str) -> MzvIndex:
    if not w or w[-1] != "y":
        raise DomainError(f"word {word_text(w)!r} does not end in y")
    return MzvIndex(len(block) + 1 for block in w[:-1].split("y"))


def words_of_weight(n: int) -> Iterator[str]:
    """All 2^n words of length n in word order."""
    for letters in _cartesian("xy", repeat=n):
        yield "".join(letters)


def hy_words(n: int) -> list[str]:
    """Words of weight n ending in y (n >= 1)."""
    if n < 1:
        return []
    return [w + "y" for w in words_of_weight(n - 1)]


def admissible_words(n: int) -> list[str]:
    """Words of weight n in xQ<x,y>y (n >= 2)."""
    if n < 2:
        return []
    return ["x" + w + "y" for w in words_of_weight(n - 2)]
