"""Command line: ``rtmaps {enumerate,coproduct,antipode,apply,relations,selftest}``.

Exit codes: 0 success / all verified, 1 a verification failed, 2 usage or parse error.
Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

import mpmath

from .forest import ParseError, enumerate_forests, parse_forest
from .hopf import antipode, coproduct
from .linear import format_rational, parse_rational
from .mzvnum import PrecisionContext, verify_kernel
from .stuffle import kawashima_basis, member
from .treemap import apply
from .words import DomainError, MzvIndex, Poly, admissible_words, parse_word, word_to_index

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
VERIFY_MODES = ("exact", "numeric", "both", "none")


@dataclass
class RelationRecord:
    forest: str
    source_word: str
    source_index: str
    image_poly: list[list[str]]
    index_combination: list[list[str]]
    exact_verified: bool | None = None
    numeric_residual: str | None = None
    failures: list[str] | None = None

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "RelationRecord":
        return cls(**json.loads(line))

    @property
    def ok(self) -> bool:
        return not self.failures

    def relation(self) -> list[tuple[object, MzvIndex]]:
        return [(parse_rational(c), MzvIndex.parse(i)) for c, i in self.index_combination]


def index_combination(p: Poly) -> list[list[str]]:
    """The polynomial rewritten as sum c * zeta(index); every word must be admissible."""
    out = []
    for w, c in p.sorted_items():
        out.append([format_rational(c), str(word_to_index(w))])
    return out


def build_record(forest_enc: str, word: str, verify: str, digits: int, terms: int, tolerance: float) -> RelationRecord:
    f = parse_forest(forest_enc)
    image = apply(f, word)
    rec = RelationRecord(
        forest=f.encoding,
        source_word=word,
        source_index=str(word_to_index(word)),
        image_poly=image.to_json(),
        index_combination=index_combination(image),
    )
    if verify == "none":
        return rec
    failures: list[str] = []
    if verify in ("exact", "both"):
        result = member(image, kawashima_basis(len(word) + f.degree)) if image else True
        rec.exact_verified = bool(result)
        if not result:
            failures.append("exact: not in the Kawashima space")
    if verify in ("numeric", "both"):
        check = verify_kernel(f, word, PrecisionContext(digits, terms), tolerance)
        rec.numeric_residual = mpmath.nstr(check.residual, 6)
        if not check.passed:
            failures.append(f"numeric: {check.status} (bound {mpmath.nstr(check.error_bound, 3)})")
    rec.failures = failures
    return rec


def _record_job(args) -> RelationRecord:
    return build_record(*args)


def iter_relations(
    max_degree: int, max_weight: int, verify: str, digits: int, terms: int, tolerance: float, jobs: int = 1
) -> Iterator[RelationRecord]:
    tasks = [
        (f.encoding, w, verify, digits, terms, tolerance)
        for d in range(1, max_degree + 1)
        for f in enumerate_forests(d)
        for n in range(2, max_weight + 1)
        for w in admissible_words(n)
    ]
    if jobs <= 1:
        yield from map(_record_job, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps submission order, so output stays deterministic
        yield from pool.map(_record_job, tasks, chunksize=8)


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags with suppressed defaults so either position works
    g = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g.add_argument("--digits", type=int, default=d(40), help="working decimal digits (default 40)")
    g.add_argument("--terms", type=int, default=d(160), help="series terms per polylog (default 160)")
    g.add_argument("--tolerance", type=float, default=d(1e-25), help="numeric kernel tolerance (default 1e-25)")
    g.add_argument("--jobs", type=int, default=d(1), help="worker processes for relations (default 1)")
    return g


def make_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(
        prog="rtmaps", description="Rooted tree maps and MZV relations.", parents=[_global_flags(suppress=False)]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list forests of a degree")
    p.add_argument("degree", type=_nonnegative)

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of a forest (JSON)")
    p.add_argument("forest")

    p = sub.add_parser("antipode", parents=[common], help="antipode of a forest (JSON)")
    p.add_argument("forest")

    p = sub.add_parser("apply", parents=[common], help="apply a forest map to a word")
    p.add_argument("forest")
    p.add_argument("word")
    p.add_argument("--json", action="store_true", help="print [coefficient, word] pairs")

    p = sub.add_parser("relations", parents=[common], help="emit MZV relations as JSON lines")
    p.add_argument("--max-degree", type=int, default=1)
    p.add_argument("--max-weight", type=int, default=2)
    p.add_argument("--verify", choices=VERIFY_MODES, default="both")

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=lambda s: {int(x) for x in s.split(",")}, default=None,
                   help="comma-separated criterion numbers")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = sys.stdout
    try:
        if args.command == "enumerate":
            forests = enumerate_forests(args.degree)
            for f in forests:
                print(f.encoding, file=out)
            print(len(forests), file=out)
            return EXIT_OK
        if args.command == "coproduct":
            print(json.dumps(coproduct(parse_forest(args.forest)).to_json()), file=out)
            return EXIT_OK
        if args.command == "antipode":
            print(json.dumps(antipode(parse_forest(args.forest)).to_json()), file=out)
            return EXIT_OK
        if args.command == "apply":
            image = apply(parse_forest(args.forest), parse_word(args.word))
            print(json.dumps(image.to_json()) if args.json else str(image), file=out)
            return EXIT_OK
        if args.command == "relations":
            if args.max_degree < 1 or args.max_weight < 2:
                print("error: need --max-degree >= 1 and --max-weight >= 2", file=sys.stderr)
                return EXIT_USAGE
            failed = 0
            for rec in iter_relations(
                args.max_degree, args.max_weight, args.verify, args.digits, args.terms, args.tolerance, args.jobs
            ):
                print(rec.to_json(), file=out, flush=False)
                if not rec.ok:
                    failed += 1
                    print(f"verification failed: {rec.forest} {rec.source_word}: {rec.failures}", file=sys.stderr)
            out.flush()
            return EXIT_FAILED if failed else EXIT_OK
        if args.command == "selftest":
            from . import acceptance

            outcomes = acceptance.run(args.only, stream=out)
            bad = [o for o in outcomes if not o.passed]
            print(f"{len(outcomes) - len(bad)}/{len(outcomes)} criteria passed", file=out)
            return EXIT_FAILED if bad else EXIT_OK
    except (ParseError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
