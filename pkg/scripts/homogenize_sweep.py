"""Homogenize random stone walls at n = required_size(r) and tabulate the outcome.

Runs both the default route (green/red subwall first) and forced rerouting,
plus the parity pattern that defeats the subwall route.
"""

import argparse
import random
import time
from collections import Counter

from holeforge.generators import elementary_wall, random_stone_wall, stone_wall_from
from holeforge.walls import homogeneous_kind, homogenize_with_report, required_size


def run(sw, r, method):
    t0 = time.perf_counter()
    out, rep = homogenize_with_report(sw, r, method=method)
    induced = out.graph == sw.graph.induced(out.graph.vertices)
    return rep.case, homogeneous_kind(out.graph), induced, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--trials", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for r in args.r:
        n = required_size(r)
        w = elementary_wall(n, n)
        rng = random.Random(args.seed + r)
        odd = [v for v in w.branch_vertices if sum(w.graph.label(v)) % 2]
        for method in ("auto", "reroute"):
            tally = Counter()
            slowest = 0.0
            bad = 0
            sets = [random_stone_wall(w, rng.random(), rng.randrange(10**9)) for _ in range(args.trials)]
            sets.append(stone_wall_from(w, odd))
            for sw in sets:
                case, kind, induced, dt = run(sw, r, method)
                tally[(case, kind)] += 1
                bad += kind is None or not induced
                slowest = max(slowest, dt)
            print(f"r={r} n={n} {method:8s} {dict(tally)}  failures={bad}  slowest={slowest:.2f}s")


if __name__ == "__main__":
    main()
