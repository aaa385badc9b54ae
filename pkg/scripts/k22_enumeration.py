"""Count 2-colourings of K_{n,n} without a monochromatic K_{2,2}, up to row order.

Rows are n-bit patterns and row order does not matter, so one colouring
per multiset of rows is checked: C(2^n + n - 1, n) classes.
"""

import argparse
import time
from math import comb

from holeforge.ramsey import count_k22_free_colorings, k22_free_coloring


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        classes, free = count_k22_free_colorings(n)
        assert classes == comb(2**n + n - 1, n)
        example = k22_free_coloring(n)
        print(f"n={n}: {classes:7d} classes, {free:4d} free  ({time.perf_counter() - t0:.2f}s)  example={example}")


if __name__ == "__main__":
    main()
