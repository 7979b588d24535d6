"""Dimension of the Kawashima space per weight, next to the number of admissible words.

    python scripts/kawashima_dims.py --max-weight 9
"""
import argparse
import time

from rtmaps.stuffle import kawashima_basis
from rtmaps.words import admissible_words


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=8)
    args = ap.parse_args()
    print(f"{'weight':>6} {'words':>6} {'dim':>6} {'generators':>10} {'seconds':>8}")
    for n in range(2, args.max_weight + 1):
        start = time.perf_counter()
        space = kawashima_basis(n)
        dt = time.perf_counter() - start
        print(f"{n:>6} {len(admissible_words(n)):>6} {space.dimension:>6} {len(space.generators):>10} {dt:>8.2f}")


if __name__ == "__main__":
    main()
