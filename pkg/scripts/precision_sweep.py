"""How the certified error bound of zeta(k1,...,kr) shrinks with the series length.

    python scripts/precision_sweep.py 2,1,2
"""
import argparse

import mpmath

from rtmaps.mzvnum import PrecisionContext, zeta_index, zeta_index_direct
from rtmaps.words import MzvIndex


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("index", type=MzvIndex.parse, nargs="?", default=MzvIndex((2, 1, 2)))
    ap.add_argument("--digits", type=int, default=60)
    args = ap.parse_args()
    ref = zeta_index(args.index, PrecisionContext(args.digits, 4 * args.digits))
    print(f"zeta({args.index}) = {ref}")
    for terms in (10, 20, 40, 80, 160):
        z = zeta_index(args.index, PrecisionContext(args.digits, terms))
        actual = abs(z.value - ref.value)
        print(f"terms={terms:>4}  bound={mpmath.nstr(z.error_bound, 3):>10}  actual={mpmath.nstr(actual, 3):>10}")
    direct = zeta_index_direct(args.index, terms=20000)
    print(f"direct series, 20000 terms: bound={mpmath.nstr(direct.error_bound, 3)} "
          f"agrees={ref.agrees_with(direct)}")


if __name__ == "__main__":
    main()
