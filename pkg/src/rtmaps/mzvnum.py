"""Multiple zeta values to high precision with rigorous error bounds.

Primary method: write zeta(w) as an iterated integral over 1 > t1 > ... > tn > 0
(x <-> dt/t, y <-> dt/(1-t)) and split each variable at 1/2. With
``w = a1 ... an``,

    zeta(w) = sum_j  Li_{tau(a1..aj)}(1/2) * Li_{a(j+1)..an}(1/2),

where ``t -> 1 - t`` turns the upper piece into a polylog at 1/2 of the dual
word. Every factor is a nested series with term ratio about 1/2, so ``N`` terms
give roughly ``2^-N`` truncation error.

Oracle method (``zeta_index_direct``): the defining nested sum truncated at
``m1 <= N``, with the tail bounded by an integral. It converges like 1/N and is
only meant as an independent cross-check.

All bounds are upper bounds; arithmetic runs ``guard_digits`` above the
requested precision and rounding is charged at a generous per-operation rate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .forest import Forest, Tree
from .treemap import apply
from .words import DomainError, MzvIndex, NotAdmissible, Poly, index_to_word, word_text, word_to_index

__all__ = [
    "PrecisionContext",
    "ZValue",
    "KernelCheck",
    "zeta_index",
    "zeta_word",
    "zeta_index_direct",
    "zeta_poly",
    "verify_kernel",
    "polylog_half",
]


@dataclass(frozen=True)
class PrecisionContext:
    working_digits: int = 40
    series_terms: int = 160
    guard_digits: int = 10

    def __post_init__(self):
        if self.working_digits < 1 or self.series_terms < 1 or self.guard_digits < 0:
            raise ValueError("precision settings must be positive")

    @property
    def bits(self) -> int:
        return int(math.ceil((self.working_digits + self.guard_digits) * math.log2(10))) + 8


DEFAULT_CONTEXT = PrecisionContext()


@dataclass(frozen=True)
class ZValue:
    value: mpmath.mpf
    error_bound: mpmath.mpf

    def contains(self, x) -> bool:
        return abs(self.value - x) <= self.error_bound

    def agrees_with(self, other: "ZValue") -> bool:
        return abs(self.value - other.value) <= self.error_bound + other.error_bound

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.value, 30)} +/- {mpmath.nstr(self.error_bound, 3)}"


@lru_cache(maxsize=None)
def _mp(bits: int) -> mpmath.ctx_mp.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = bits
    return ctx


def _unit_roundoff(mp) -> mpmath.mpf:
    return mp.ldexp(mp.mpf(1), 1 - mp.prec)


def _nested_partial(mp, parts: tuple[int, ...], terms: int, ratio):
    """sum over terms >= n1 > ... > nr > 0 of ratio^n1 / prod n_i^k_i."""
    k1, inner = parts[0], parts[1:]
    depth = len(inner)
    # acc[j] = sum over chains below the current n for inner[j:]
    acc = [mp.zero] * depth + [mp.one]
    total = mp.zero
    power = mp.one
    for n in range(1, terms + 1):
        nn = mp.mpf(n)
        if ratio is not None:
            power = power * ratio
            total += power * acc[0] / nn**k1
        else:
            total += acc[0] / nn**k1
        for j in range(depth):
            acc[j] += acc[j + 1] / nn ** inner[j]
    return total


@lru_cache(maxsize=1 << 16)
def polylog_half(parts: tuple[int, ...], bits: int, terms: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Li_{k1..kr}(1/2) and an error bound (truncation + rounding)."""
    mp = _mp(bits)
    if not parts:
        return mp.one, mp.zero
    s = len(parts)
    value = _nested_partial(mp, parts, terms, mp.mpf(0.5))
    # inner chain sums are elementary symmetric in 1/n, so <= H_n^(s-1)/(s-1)! <= (1+ln n)^(s-1)/(s-1)!
    n0 = terms + 1
    q = 0.5 * (1 + 1 / (n0 * (1 + math.log(n0)))) ** (s - 1)
    if q >= 1:
        return value, mp.inf
    lead = (
        mp.ldexp(mp.one, -n0)
        * (1 + mp.log(n0)) ** (s - 1)
        / mp.factorial(s - 1)
        / mp.mpf(n0) ** parts[0]
    )
    trunc = lead / (1 - mp.mpf(q))
    rounding = value * 4 * (terms + 2) * (s + 3) * _unit_roundoff(mp)
    return value, trunc + rounding


def _word_value(word: str, ctx: PrecisionContext) -> tuple[mpmath.mpf, mpmath.mpf]:
    mp = _mp(ctx.bits)
    n = len(word)
    swap = str.maketrans("xy", "yx")
    total = mp.zero
    err = mp.zero
    for j in range(n + 1):
        upper = word[:j][::-1].translate(swap)
        lower = word[j:]
        a, ea = polylog_half(tuple(word_to_index(upper)) if upper else (), ctx.bits, ctx.series_terms)
        b, eb = polylog_half(tuple(word_to_index(lower)) if lower else (), ctx.bits, ctx.series_terms)
        total += a * b
        err += a * eb + b * ea + ea * eb
    err += total * 2 * (n + 2) * _unit_roundoff(mp)
    return total, err


@lru_cache(maxsize=1 << 14)
def _zeta_word_cached(word: str, ctx: PrecisionContext) -> ZValue:
    value, err = _word_value(word, ctx)
    return ZValue(value, err)


def zeta_word(word: str, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ZValue:
    """Z of a single word: 1 for the empty word, zeta(index) for an admissible one."""
    if not word:
        mp = _mp(ctx.bits)
        return ZValue(mp.one, mp.zero)
    if word[0] != "x" or word[-1] != "y":
        raise DomainError(f"word {word_text(word)!r} is not in Q + xQ<x,y>y")
    return _zeta_word_cached(word, ctx)


def zeta_index(index, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ZValue:
    """zeta(k1, ..., kr) for k1 >= 2."""
    index = MzvIndex(index)
    if not index.admissible:
        raise NotAdmissible(f"zeta{tuple(index)} diverges (k1 = 1)")
    return _zeta_word_cached(index_to_word(index), ctx)


def zeta_index_direct(index, terms: int = 20000, digits: int = 30) -> ZValue:
    """Truncated defining series with an integral tail bound (slow, independent check)."""
    index = MzvIndex(index)
    if not index.admissible:
        raise NotAdmissible(f"zeta{tuple(index)} diverges (k1 = 1)")
    mp = _mp(int(math.ceil(digits * math.log2(10))) + 8)
    parts = tuple(index)
    value = _nested_partial(mp, parts, terms, None)
    k, m = parts[0], len(parts) - 1
    # tail <= int_N^inf (1+ln t)^m t^-k dt / m!, valid once the integrand decreases
    if 1 + math.log(terms) < m / k:
        return ZValue(value, mp.inf)
    a = mp.mpf(k - 1)
    integral = mp.e**a * mp.gammainc(m + 1, a * (1 + mp.log(terms))) / a ** (m + 1)
    trunc = integral / mp.factorial(m)
    rounding = value * 4 * (terms + 2) * (len(parts) + 3) * _unit_roundoff(mp)
    return ZValue(value, trunc + rounding)


def zeta_poly(p: Poly | str, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ZValue:
    """Linear extension of Z to Q + xQ<x,y>y."""
    if isinstance(p, str):
        p = Poly.word(p)
    mp = _mp(ctx.bits)
    for w in p:
        if w and (w[0] != "x" or w[-1] != "y"):
            raise DomainError(f"word {word_text(w)!r} is not in Q + xQ<x,y>y")
    total = mp.zero
    err = mp.zero
    magnitude = mp.zero
    for w, c in p.sorted_items():
        z = zeta_word(w, ctx)
        cc = mp.mpf(c.numerator) / c.denominator if not isinstance(c, int) else mp.mpf(c)
        term = cc * z.value
        total += term
        magnitude += abs(term)
        err += abs(cc) * z.error_bound
    if len(p) > 1 or (len(p) == 1 and "" not in p.terms):
        err += magnitude * 2 * (len(p) + 2) * _unit_roundoff(mp)
    return ZValue(total, err)


@dataclass(frozen=True)
class KernelCheck:
    status: str  # "pass", "fail" or "inconclusive"
    residual: mpmath.mpf
    error_bound: mpmath.mpf
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.passed


def verify_kernel(
    f: Forest | Tree,
    w: str,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    tolerance: float = 1e-25,
) -> KernelCheck:
    """Check numerically that Z(f(w)) = 0 for an admissible word ``w``."""
    if isinstance(f, Forest) and f.is_unit:
        raise ValueError("the identity forest gives no relation")
    if not w or w[0] != "x" or w[-1] != "y":
        raise NotAdmissible(f"word {word_text(w)!r} is not admissible")
    z = zeta_poly(apply(f, w), ctx)
    residual = abs(z.value)
    if z.error_bound >= tolerance:
        status = "inconclusive"
    elif residual < tolerance:
        status = "pass"
    else:
        status = "fail"
    return KernelCheck(status, residual, z.error_bound, tolerance)
