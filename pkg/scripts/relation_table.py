"""Print the MZV relations produced by every forest of small degree.

Each line reads ``forest  word  =>  sum c * zeta(k1,...,kr) = 0`` and is checked
against the Kawashima space and numerically.

    python scripts/relation_table.py --max-degree 2 --max-weight 4
"""
import argparse

from rtmaps.forest import enumerate_forests
from rtmaps.mzvnum import PrecisionContext, verify_kernel
from rtmaps.stuffle import kawashima_basis, member
from rtmaps.treemap import apply
from rtmaps.words import admissible_words, word_to_index


def relation_text(p) -> str:
    if not p:
        return "0 (trivial)"
    out = ""
    for w, c in p.sorted_items():
        term = f"z({word_to_index(w)})" if abs(c) == 1 else f"{abs(c)} z({word_to_index(w)})"
        sign = "-" if c < 0 else "+"
        out += f"{sign}{term}" if not out else f" {sign} {term}"
    return out.lstrip("+") + " = 0"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--max-weight", type=int, default=4)
    ap.add_argument("--digits", type=int, default=40)
    args = ap.parse_args()
    ctx = PrecisionContext(args.digits)
    checked = 0
    for d in range(1, args.max_degree + 1):
        for f in enumerate_forests(d):
            for n in range(2, args.max_weight + 1):
                for w in admissible_words(n):
                    p = apply(f, w)
                    exact = bool(member(p, kawashima_basis(n + d))) if p else True
                    numeric = verify_kernel(f, w, ctx)
                    flag = "ok" if exact and numeric.passed else "FAILED"
                    print(f"{f.encoding:<14} {w:<8} => {relation_text(p)}   [{flag}]")
                    checked += 1
    print(f"{checked} relations")


if __name__ == "__main__":
    main()
