"""Harmonic (stuffle) product, the operators H_w and the Kawashima space.

The Kawashima space of weight n is the span of ``L_x phi(u * v)`` over words
``u, v`` ending in y with ``|u| + |v| = n - 1``. It is kept in reduced row
echelon form over Q, pivoting on the smallest word in word order, and every
basis row remembers which combination of generators produced it so that a
membership test can hand back a certificate in terms of generator pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .forest import Forest, Tree
from .linear import LinComb, format_rational
from .treemap import apply
from .words import (
    DomainError,
    Poly,
    WordOperator,
    admissible_words,
    chi_x,
    chi_x_inverse,
    hy_words,
    phi_auto,
    tau_anti,
    word_order,
    word_text,
    word_to_index,
)

__all__ = [
    "WeightMismatch",
    "stuffle",
    "h_w",
    "KawashimaSpace",
    "Certificate",
    "NotMember",
    "kawashima_basis",
    "kawashima_generator",
    "member",
    "duality_containment_test",
    "corollary_check",
    "corollary_word",
]


class WeightMismatch(ValueError):
    """Polynomial weight differs from the weight of the space."""


@lru_cache(maxsize=1 << 18)
def _stuffle_idx(a: tuple[int, ...], b: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    k, rest_a = a[0], a[1:]
    l, rest_b = b[0], b[1:]
    out: dict = {}
    for head, left, right in ((k, rest_a, b), (l, a, rest_b), (k + l, rest_a, rest_b)):
        for tail, c in _stuffle_idx(left, right).items():
            LinComb.accumulate(out, (head,) + tail, c)
    return out


@lru_cache(maxsize=1 << 16)
def _to_idx(w: str) -> tuple[int, ...]:
    if not w:
        return ()
    if w[-1] != "y":
        raise DomainError(f"stuffle is defined on Q + Q<x,y>y; got word {word_text(w)!r}")
    return tuple(word_to_index(w))


@lru_cache(maxsize=1 << 18)
def _from_idx(i: tuple[int, ...]) -> str:
    # parts come out of _stuffle_idx, so they are already positive
    return "".join("x" * (k - 1) + "y" for k in i)


def stuffle(u: Poly | str, v: Poly | str) -> Poly:
    """The harmonic product on Q + Q<x,y>y."""
    u = Poly.word(u) if isinstance(u, str) else u
    v = Poly.word(v) if isinstance(v, str) else v
    acc: dict = {}
    for a, c in u.items():
        ia = _to_idx(a)
        for b, d in v.items():
            for i, e in _stuffle_idx(ia, _to_idx(b)).items():
                LinComb.accumulate(acc, _from_idx(i), c * d * e)
    return Poly(acc)


def h_w(w: Poly | str) -> WordOperator:
    """v -> w * v."""
    w = Poly.word(w) if isinstance(w, str) else w
    if not w.in_h1():
        raise DomainError("H_w needs w in Q + Q<x,y>y")
    return WordOperator(lambda v: stuffle(w, Poly.word(v)), f"H[{w}]")


def kawashima_generator(u: str, v: str) -> Poly:
    """L_x phi(u * v)."""
    s = phi_auto(stuffle(u, v))
    return Poly._raw({"x" + w: c for w, c in s.items()})


@dataclass(frozen=True)
class Certificate:
    """``p = sum coeff * L_x phi(u * v)`` over the listed generator pairs."""

    combination: tuple[tuple[tuple[str, str], int | Fraction], ...]
    basis_coefficients: tuple[tuple[str, int | Fraction], ...] = ()

    is_member = True

    def __bool__(self) -> bool:
        return True

    def to_json(self) -> list[list[str]]:
        return [[f"({word_text(u)},{word_text(v)})", format_rational(c)] for (u, v), c in self.combination]


@dataclass(frozen=True)
class NotMember:
    residual: Poly

    is_member = False

    def __bool__(self) -> bool:
        return False


@dataclass
class KawashimaSpace:
    weight: int
    generators: list[tuple[str, str]] = field(default_factory=list)
    # pivot word -> (row, generator combination); row has coefficient 1 at its pivot
    rows: dict[str, tuple[dict[str, object], dict[int, object]]] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> list[Poly]:
        return [Poly(self.rows[p][0]) for p in sorted(self.rows, key=word_order)]

    def pivots(self) -> list[str]:
        return sorted(self.rows, key=word_order)

    def reduce(self, vec: dict[str, object], track: dict[int, object] | None = None):
        """Eliminate every pivot from ``vec`` in place; ``track`` follows along."""
        rows = self.rows
        for pivot in sorted((w for w in vec if w in rows), key=word_order):
            c = vec.get(pivot)
            if not c:
                continue
            row, comb = rows[pivot]
            for w, r in row.items():
                v = vec.get(w, 0) - c * r
                if v:
                    vec[w] = v
                else:
                    vec.pop(w, None)
            if track is not None:
                for g, r in comb.items():
                    v = track.get(g, 0) - c * r
                    if v:
                        track[g] = v
                    else:
                        track.pop(g, None)
        return vec

    def insert(self, vec: dict[str, object], comb: dict[int, object]) -> bool:
        """Add a reduced nonzero vector as a new basis row, keeping full reduction."""
        if not vec:
            return False
        pivot = min(vec, key=word_order)
        lead = vec[pivot]
        inv = Fraction(1) / lead if lead != 1 else 1
        row = {w: _norm(c * inv) for w, c in vec.items()}
        comb = {g: _norm(c * inv) for g, c in comb.items()}
        for other_pivot, (orow, ocomb) in self.rows.items():
            c = orow.get(pivot)
            if not c:
                continue
            for w, r in row.items():
                v = orow.get(w, 0) - c * r
                if v:
                    orow[w] = _norm(v)
                else:
                    orow.pop(w, None)
            for g, r in comb.items():
                v = ocomb.get(g, 0) - c * r
                if v:
                    ocomb[g] = _norm(v)
                else:
                    ocomb.pop(g, None)
        self.rows[pivot] = (row, comb)
        return True


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _generator_pairs(weight: int) -> Iterator[tuple[str, str]]:
    # unordered pairs {u, v} (stuffle is commutative), u <= v in word order
    total = weight - 1
    for a in range(1, total // 2 + 1):
        b = total - a
        us = hy_words(a)
        vs = hy_words(b)
        for u in us:
            for v in vs:
                if a == b and v < u:
                    continue
                yield (u, v)


@lru_cache(maxsize=None)
def kawashima_basis(weight: int) -> KawashimaSpace:
    """Reduced basis of the weight-``weight`` part of L_x phi(Hy * Hy)."""
    if weight < 2:
        raise ValueError("weight must be at least 2")
    space = KawashimaSpace(weight)
    for gid, (u, v) in enumerate(_generator_pairs(weight)):
        space.generators.append((u, v))
        vec = dict(kawashima_generator(u, v).terms)
        comb: dict[int, object] = {gid: 1}
        space.reduce(vec, comb)
        space.insert(vec, comb)
    return space


def member(p: Poly, space: KawashimaSpace) -> Certificate | NotMember:
    """Decide whether ``p`` lies in ``space``; certificate or nonzero residual."""
    weights = p.weights()
    if weights and weights != {space.weight}:
        raise WeightMismatch(f"polynomial weights {sorted(weights)} vs space weight {space.weight}")
    rows = space.rows
    vec = dict(p.terms)
    # rows are fully reduced, so the coefficient of each pivot is final before elimination
    coeffs = {w: vec[w] for w in sorted(vec, key=word_order) if w in rows}
    space.reduce(vec)
    if vec:
        return NotMember(Poly(vec))
    comb: dict[int, object] = {}
    for pivot, c in coeffs.items():
        for g, r in rows[pivot][1].items():
            LinComb.accumulate(comb, g, c * r)
    combination = tuple((space.generators[g], _norm(c)) for g, c in sorted(comb.items()))
    return Certificate(combination, tuple((w, _norm(c)) for w, c in coeffs.items()))


def duality_containment_test(weight: int) -> bool:
    """(1 - tau)(w) is in the Kawashima space for every admissible word of this weight."""
    space = kawashima_basis(weight)
    return all(
        member(Poly.word(w) - tau_anti(w), space).is_member for w in admissible_words(weight)
    )


def corollary_word(f: Forest | Tree) -> Poly:
    """The w with f chi_x = chi_x H_w, namely chi_x^-1(f(y))."""
    return chi_x_inverse(apply(f, "y"))


def corollary_check(f: Forest | Tree, max_weight: int) -> bool:
    """f(chi_x(v)) == chi_x(w * v) for v = 1 and all words v in Hy of weight <= max_weight."""
    if isinstance(f, Forest) and f.is_unit:
        raise ValueError("the corollary concerns forests other than I")
    w = corollary_word(f)
    vs = [""] + [v for n in range(1, max_weight + 1) for v in hy_words(n)]
    return all(apply(f, chi_x(v)) == chi_x(stuffle(w, v)) for v in vs)
