"""Decompose a seeded corpus and cross-check widths, certificates and reassembly."""

import argparse
import json
import time

from holeforge.verify import verify_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--depth", type=int, default=5)
    ap.add_argument("--rings", type=int, default=50)
    ap.add_argument("--archive", default="counterexamples")
    ap.add_argument("--json", help="write the full payload here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    payload = verify_corpus(args.seed, args.count, args.depth, rings=args.rings, archive_dir=args.archive)
    s = payload["summary"]
    sizes = sorted(r["n"] for r in payload["instances"])
    print(f"instances      {s['instances']}  (|V| {sizes[0]}..{sizes[-1]}, median {sizes[len(sizes) // 2]})")
    print(f"max td width   {s['max_td_width']}")
    print(f"oracle checked {s['oracle_checked']}")
    print(f"reassembled    {s['reassembled']}")
    print(f"rings          {s['rings']}")
    print(f"failures       {s['failures'] or 'none'}")
    print(f"elapsed        {time.perf_counter() - t0:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
