"""Exit criteria for the library, runnable from pytest and from ``rtmaps selftest``.

Each criterion returns ``(ok, detail)``; :func:`run` adds wall-clock timing
against the criterion's budget and prints one PASS/FAIL line.
"""
from __future__ import annotations

import math
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, TextIO

import mpmath

from . import hopf
from .forest import LEAF, UNIT, Forest, enumerate_forests, ladder, parse_forest, parse_tree
from .hopf import ForestSum, antipode, counit, delta_k
from .linear import LinComb
from .mzvnum import PrecisionContext, verify_kernel, zeta_index, zeta_index_direct
from .stuffle import corollary_check, duality_containment_test, kawashima_basis, member, stuffle
from .treemap import apply, letter_image, phi, psi, tree_map, words_up_to
from .words import Poly, admissible_words, r_op

DOT = Forest((LEAF,))
TWO_DOTS = Forest((LEAF, LEAF))
LADDER2 = Forest((ladder(2),))
CHERRY = Forest((parse_tree("[[][]]"),))

NUMERIC_TOLERANCE = 1e-25
PI2_DIGITS = 30


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget_s: float
    check: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class Outcome:
    criterion: Criterion
    ok: bool
    within_budget: bool
    elapsed: float
    detail: str

    @property
    def passed(self) -> bool:
        return self.ok and self.within_budget

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        budget = "" if self.within_budget else f" OVER BUDGET ({self.criterion.budget_s:g}s)"
        return (
            f"{tag} [{self.criterion.number:2d}] {self.criterion.name}: "
            f"{self.detail} ({self.elapsed:.2f}s){budget}"
        )


def _nonunit_forests(max_degree: int) -> list[Forest]:
    return [f for n in range(1, max_degree + 1) for f in enumerate_forests(n)]


def _ts(*terms) -> hopf.TensorSum:
    return hopf.TensorSum(((parse_forest(a), parse_forest(b)), c) for c, a, b in terms)


# 1 -------------------------------------------------------------------------

def _trees_by_growth(n: int) -> set[str]:
    """Trees with n nodes by grafting a leaf onto every node of every smaller tree."""
    level = {LEAF.encoding: LEAF}
    for _ in range(n - 1):
        nxt = {}
        for t in level.values():
            for g in hopf.graft_leaf_everywhere(t):
                nxt[g.encoding] = g
        level = nxt
    return set(level)


def check_enumeration() -> tuple[bool, str]:
    expected = [1, 2, 4, 9, 20, 48]
    counts = [len(enumerate_forests(n)) for n in range(1, 7)]
    oracle = [len(_trees_by_growth(n + 1)) for n in range(1, 7)]
    distinct = all(len(set(enumerate_forests(n))) == len(enumerate_forests(n)) for n in range(1, 7))
    ok = counts == expected == oracle and distinct
    return ok, f"counts={counts} oracle={oracle}"


# 2 -------------------------------------------------------------------------

def _triple(ts_fn, f: Forest, left: bool) -> dict:
    out: dict = {}
    for (a, b), c in ts_fn(f).items():
        if left:
            for (p, q), d in ts_fn(a).items():
                LinComb.accumulate(out, (p, q, b), c * d)
        else:
            for (p, q), d in ts_fn(b).items():
                LinComb.accumulate(out, (a, p, q), c * d)
    return out


def check_coproduct() -> tuple[bool, str]:
    cop = hopf.coproduct
    examples = {
        DOT: _ts((1, "[]", "I"), (1, "I", "[]")),
        TWO_DOTS: _ts((1, "[]*[]", "I"), (2, "[]", "[]"), (1, "I", "[]*[]")),
        LADDER2: _ts((1, "[[]]", "I"), (1, "[]", "[]"), (1, "I", "[[]]")),
        CHERRY: _ts((1, "[[][]]", "I"), (1, "[]*[]", "[]"), (2, "[]", "[[]]"), (1, "I", "[[][]]")),
    }
    worked = all(cop(f) == v for f, v in examples.items())
    forests = [f for n in range(0, 5) for f in enumerate_forests(n)]
    coassoc = all(_triple(cop, f, True) == _triple(cop, f, False) for f in forests)
    counit_ok = True
    for f in forests:
        left: dict = {}
        right: dict = {}
        for (a, b), c in cop(f).items():
            if a.is_unit:
                LinComb.accumulate(left, b, c)
            if b.is_unit:
                LinComb.accumulate(right, a, c)
        counit_ok &= left == {f: 1} == right
    ok = worked and coassoc and counit_ok
    return ok, f"examples={worked} coassociative={coassoc} counit={counit_ok} on {len(forests)} forests"


# 3 -------------------------------------------------------------------------

def check_antipode() -> tuple[bool, str]:
    examples = {
        UNIT: ForestSum.of(UNIT),
        DOT: ForestSum.of(DOT, -1),
        LADDER2: ForestSum.of(LADDER2, -1) + ForestSum.of(TWO_DOTS),
        TWO_DOTS: ForestSum.of(TWO_DOTS),
    }
    worked = all(antipode(f) == v for f, v in examples.items())
    forests = [f for n in range(0, 5) for f in enumerate_forests(n)]
    axiom = True
    for f in forests:
        target = ForestSum.of(UNIT, counit(f))
        lhs = ForestSum.zero()
        rhs = ForestSum.zero()
        for (a, b), c in hopf.coproduct(f).items():
            lhs = lhs + (antipode(a) * ForestSum.of(b)).scale(c)
            rhs = rhs + (ForestSum.of(a) * antipode(b)).scale(c)
        axiom &= lhs == target == rhs
    return worked and axiom, f"examples={worked} axiom={axiom} on {len(forests)} forests"


# 4 -------------------------------------------------------------------------

def check_natural_growth() -> tuple[bool, str]:
    d1 = delta_k(1) == ForestSum.of(DOT)
    d2 = delta_k(2) == ForestSum.of(LADDER2)
    d3 = delta_k(3) == ForestSum.of(ladder(3)) + ForestSum.of(CHERRY)
    d4 = delta_k(4)
    d4_ok = (
        len(d4) == 4
        and all(f.is_tree for f in d4)
        and sorted(d4.terms.values()) == [1, 1, 1, 3]
    )
    sums = [sum(delta_k(k).terms.values()) for k in range(1, 7)]
    sums_ok = sums == [math.factorial(k - 1) for k in range(1, 7)]
    ok = d1 and d2 and d3 and d4_ok and sums_ok
    return ok, f"delta1-3={d1 and d2 and d3} delta4={d4_ok} coefficient sums={sums}"


# 5 -------------------------------------------------------------------------

def check_base_cases() -> tuple[bool, str]:
    dot_ok = letter_image(DOT, "x") == Poly.word("xy") and letter_image(DOT, "y") == Poly.word("xy", -1)
    ladder_ok = letter_image(LADDER2, "x") == Poly({"xxy": 1, "xyy": 2})
    forests = _nonunit_forests(4)
    z_ok = all(apply(f, Poly({"x": 1, "y": 1})) == 0 for f in forests)
    one_ok = all(apply(f, "") == 0 for f in forests)
    ok = dot_ok and ladder_ok and z_ok and one_ok
    return ok, f"dot={dot_ok} ladder2={ladder_ok} f(z)=0:{z_ok} f(1)=0:{one_ok} over {len(forests)} forests"


# 6 -------------------------------------------------------------------------

def check_theorem2() -> tuple[bool, str]:
    forests = _nonunit_forests(3)
    words = words_up_to(5)
    x, y = Poly.word("x"), Poly.word("y")
    a_ok = all(psi(f).on_word(w) == phi(f)(Poly.word(w) * x) * y for f in forests for w in words)
    sources = ["x", "y"] + [w for n in range(2, 6) for w in admissible_words(n)]
    b_ok = all(apply(f, w).in_xhy() for f in forests for w in sources)
    pairs = [(f, g) for f in forests for g in forests if f.degree + g.degree <= 5]
    e_ok = all(apply(f, apply(g, w)) == apply(g, apply(f, w)) for f, g in pairs for w in words)
    split_pairs = [(v, w) for v in words for w in words if len(v) + len(w) <= 5]
    f_ok = True
    for f in forests:
        for v, w in split_pairs:
            rhs = Poly.zero()
            for (a, b), c in hopf.coproduct(f).items():
                rhs = rhs + (apply(a, v) * apply(b, w)).scale(c)
            f_ok &= apply(f, v + w) == rhs
    ok = a_ok and b_ok and e_ok and f_ok
    return ok, (
        f"(a)={a_ok} (b)={b_ok} (e)={e_ok} on {len(pairs)} pairs "
        f"(f)={f_ok} on {len(split_pairs)} word pairs"
    )


# 7 -------------------------------------------------------------------------

def check_phi_anchors() -> tuple[bool, str]:
    rz = r_op(Poly({"x": 1, "y": 1}))
    dot = tree_map(DOT)
    words = words_up_to(6)
    expected = {TWO_DOTS: 2 * dot - rz, LADDER2: dot + rz}
    ok = True
    for f, op in expected.items():
        ok &= all(phi(f)(w) == op.on_word(w) for w in words)
        ok &= all(psi(f).on_word(w) == op(Poly.word(w + "x")) * Poly.word("y") for w in words)
    return ok, f"phi(..)={phi(TWO_DOTS)}, phi(ladder2)={phi(LADDER2)}"


# 8 -------------------------------------------------------------------------

def _random_h1(rng: random.Random, weight: int, max_terms: int = 1) -> Poly:
    """Up to ``max_terms`` random words of the given weight from Q + Q<x,y>y, small coefficients."""
    acc: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        w = "" if weight == 0 else "".join(rng.choice("xy") for _ in range(weight - 1)) + "y"
        LinComb.accumulate(acc, w, rng.choice([-3, -2, -1, 1, 2, 3]))
    return Poly(acc)


def random_h1_triple(rng: random.Random, max_weight: int = 6) -> tuple[Poly, Poly, Poly]:
    # both laws are bilinear, so scaled single words cover them
    return tuple(_random_h1(rng, rng.randint(0, max_weight)) for _ in range(3))  # type: ignore[return-value]


def check_stuffle() -> tuple[bool, str]:
    rng = random.Random(20240601)
    comm = assoc = True
    for _ in range(200):
        a, b, c = random_h1_triple(rng, 6)
        comm &= stuffle(a, b) == stuffle(b, a)
        assoc &= stuffle(stuffle(a, b), c) == stuffle(a, stuffle(b, c))
    z1z1 = stuffle("y", "y") == Poly({"yy": 2, "xy": 1})
    ok = comm and assoc and z1z1
    return ok, f"commutative={comm} associative={assoc} z1*z1={z1z1} over 200 triples, each factor of weight <= 6"


# 9 -------------------------------------------------------------------------

def check_kawashima_exact() -> tuple[bool, str]:
    count = 0
    failures = []
    for f in _nonunit_forests(3):
        for n in range(2, 8):
            space = kawashima_basis(n + f.degree)
            for w in admissible_words(n):
                count += 1
                if not member(apply(f, w), space):
                    failures.append((f.encoding, w))
    return not failures, f"{count - len(failures)}/{count} images in the Kawashima space" + (
        f"; failures {failures[:5]}" if failures else ""
    )


# 10 ------------------------------------------------------------------------

def check_corollary() -> tuple[bool, str]:
    results = {f.encoding: corollary_check(f, 5) for f in _nonunit_forests(3)}
    bad = [k for k, v in results.items() if not v]
    return not bad, f"{len(results) - len(bad)}/{len(results)} forests" + (f"; failing {bad}" if bad else "")


# 11 ------------------------------------------------------------------------

def check_duality() -> tuple[bool, str]:
    results = {n: duality_containment_test(n) for n in range(2, 9)}
    return all(results.values()), f"weights 2..8: {results}"


# 12 ------------------------------------------------------------------------

def check_numeric_kernel() -> tuple[bool, str]:
    ctx = PrecisionContext(working_digits=40)
    worst = mpmath.mpf(0)
    bad = []
    count = 0
    for f in _nonunit_forests(3):
        for n in range(2, 7):
            for w in admissible_words(n):
                count += 1
                r = verify_kernel(f, w, ctx, NUMERIC_TOLERANCE)
                worst = max(worst, r.residual)
                if not r.passed:
                    bad.append((f.encoding, w, r.status))
    euler = verify_kernel(DOT, "xy", ctx, NUMERIC_TOLERANCE)
    euler_ok = euler.passed and apply(DOT, "xy") == Poly({"xyy": 1, "xxy": -1})
    w4 = Poly({"xxxy": -1, "xxyy": -1, "xyyy": 2, "xyxy": -1})
    ladder_ok = apply(LADDER2, "xy") == w4 and verify_kernel(LADDER2, "xy", ctx, NUMERIC_TOLERANCE).passed
    ok = not bad and euler_ok and ladder_ok
    return ok, (
        f"{count - len(bad)}/{count} |Z(f(w))| < {NUMERIC_TOLERANCE:g}, worst {mpmath.nstr(worst, 3)}; "
        f"euler={euler_ok} ladder2(xy)={ladder_ok}"
    )


# 13 ------------------------------------------------------------------------

def check_numeric_sanity() -> tuple[bool, str]:
    ctx = PrecisionContext(working_digits=40)
    z2 = zeta_index((2,), ctx)
    with mpmath.workdps(60):
        pi_ok = abs(z2.value - mpmath.pi**2 / 6) < mpmath.mpf(10) ** (-PI2_DIGITS)
    agree = []
    for n in range(2, 7):
        for w in admissible_words(n):
            idx = tuple(len(b) + 1 for b in w[:-1].split("y"))
            fast = zeta_index(idx, ctx)
            slow = zeta_index_direct(idx)
            agree.append(fast.agrees_with(slow))
    ok = pi_ok and all(agree)
    return ok, f"zeta(2)=pi^2/6 to {PI2_DIGITS} digits: {pi_ok}; paths agree on {sum(agree)}/{len(agree)} indices"


CRITERIA: list[Criterion] = [
    Criterion(1, "forest enumeration counts", 1.0, check_enumeration),
    Criterion(2, "coproduct examples, coassociativity, counit", 5.0, check_coproduct),
    Criterion(3, "antipode examples and axiom", 5.0, check_antipode),
    Criterion(4, "natural growth delta_k", 2.0, check_natural_growth),
    Criterion(5, "tree map base cases, f(z)=0, f(1)=0", 5.0, check_base_cases),
    Criterion(6, "psi = R_y phi R_x, x-H-y image, commutativity, comultiplicativity", 60.0, check_theorem2),
    Criterion(7, "phi anchors of degree 2", 5.0, check_phi_anchors),
    Criterion(8, "stuffle product laws", 10.0, check_stuffle),
    Criterion(9, "tree-map images lie in the Kawashima space", 600.0, check_kawashima_exact),
    Criterion(10, "f chi_x = chi_x H_w", 60.0, check_corollary),
    Criterion(11, "duality inside the Kawashima space", 60.0, check_duality),
    Criterion(12, "numeric kernel |Z(f(w))| < 1e-25", 300.0, check_numeric_kernel),
    Criterion(13, "zeta(2) vs pi^2/6 and two evaluation paths", 60.0, check_numeric_sanity),
]


def run_criterion(c: Criterion) -> Outcome:
    start = time.perf_counter()
    try:
        ok, detail = c.check()
    except Exception as exc:  # report, don't abort the suite
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    return Outcome(c, ok, elapsed <= c.budget_s, elapsed, detail)


def run(only: set[int] | None = None, stream: TextIO = sys.stdout) -> list[Outcome]:
    outcomes = []
    for c in CRITERIA:
        if only and c.number not in only:
            continue
        out = run_criterion(c)
        print(out.line(), file=stream, flush=True)
        outcomes.append(out)
    return outcomes
