"""Finitely supported linear combinations with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)
Coeff = "int | Fraction"

__all__ = ["LinComb", "format_rational", "parse_rational"]


def format_rational(c: Rational) -> str:
    """Always ``p/q``, including integers (``-2/1``)."""
    q = Fraction(c)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> int | Fraction:
    q = Fraction(text)
    return q.numerator if q.denominator == 1 else q


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LinComb(Generic[K]):
    """Immutable-by-convention map ``key -> nonzero coefficient``.

    Coefficients are ``int`` or ``Fraction``; floats are rejected so nothing
    inexact leaks in. Subclasses fix the key type and the product.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[K, Any] | Iterable[tuple[K, Any]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, Any] = {}
        for k, c in items:
            if not isinstance(c, Rational):
                raise TypeError(f"coefficient {c!r} is not an exact rational")
            acc[k] = acc.get(k, 0) + c
        self.terms: dict[K, Any] = {k: _norm(c) for k, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: terms already nonzero and normalized
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def basis(cls, key: K, coeff=1):
        return cls._raw({key: coeff} if coeff != 0 else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[K]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coeff(self, key: K):
        return self.terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return self.zero()
        return self._raw({k: _norm(v * c) for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Rational):
            return self.scale(c)
        return NotImplemented

    def map_keys(self, fn: Callable[[K], K]):
        acc: dict = {}
        for k, c in self.terms.items():
            nk = fn(k)
            acc[nk] = acc.get(nk, 0) + c
        return self._raw({k: _norm(c) for k, c in acc.items() if c})

    def sorted_items(self) -> list[tuple[K, Any]]:
        return sorted(self.terms.items(), key=lambda kc: self.order_key(kc[0]))

    @staticmethod
    def order_key(key):
        return key

    @staticmethod
    def accumulate(acc: dict, key, c) -> None:
        v = acc.get(key, 0) + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
