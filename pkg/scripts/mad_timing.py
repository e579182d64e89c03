#!/usr/bin/env python3
"""Flow-based mad against subset enumeration: agreement and wall time by n.

    python scripts/mad_timing.py --max-n 16 --per-n 10
"""

import argparse
import random
import sys
import time

from inccolor.graph import Graph
from inccolor.mad import mad, mad_oracle


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--per-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'flow ms':>9} {'oracle ms':>10} agree")
    ok = True
    for n in range(2, args.max_n + 1):
        tf = to = 0.0
        agree = True
        for _ in range(args.per_n):
            p = rng.random()
            g = Graph.from_edges([(u, v) for u in range(n) for v in range(u + 1, n)
                                  if rng.random() < p], n=n)
            t = time.perf_counter()
            a = mad(g).value
            tf += time.perf_counter() - t
            t = time.perf_counter()
            b = mad_oracle(g)
            to += time.perf_counter() - t
            agree &= a == b
        ok &= agree
        print(f"{n:>3} {1000 * tf / args.per_n:>9.2f} {1000 * to / args.per_n:>10.2f} {agree}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
