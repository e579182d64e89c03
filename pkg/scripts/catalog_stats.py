#!/usr/bin/env python3
"""Which configurations fire and which repair tier succeeds, per profile.

Colors random instances under each profile's mad bound and tallies the
matched patterns during peeling and the repair tier used on every re-insertion.

    python scripts/catalog_stats.py --count 40 --seed 0
"""

import argparse
import random
import sys
import time
from collections import Counter

from inccolor import generators as gen
from inccolor.catalog import PROFILES, CatalogStats, color_catalog
from inccolor.incidence import verify

FAMILIES = {
    "T1": (3, (1, 3), (7, 12)),
    "T2": (3, (1, 2), (9, 14)),
    "T3": (4, (1, 2), (9, 12)),
    "T4": (4, (1, 3), (6, 8)),
    "T5": (5, (1, 2), (12, 14)),
    "T6": (5, (1, 3), (7, 11)),
}


def instances(pid, rng, count):
    p = PROFILES[pid]
    r, hubs, (lo, hi) = FAMILIES[pid]
    made = 0
    while made < count:
        n = rng.choice([x for x in range(30, 61) if (x * r) % 2 == 0])
        try:
            g = gen.regular_hubs(n, r, rng.randint(*hubs), rng.randint(lo, hi), p.mad_bound,
                                 rng, attempts=20)
        except gen.GenerationError:
            continue
        made += 1
        yield g


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--profiles", nargs="*", default=sorted(PROFILES))
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    bad = 0
    for pid in args.profiles:
        p = PROFILES[pid]
        stats = CatalogStats()
        t0 = time.perf_counter()
        for g in instances(pid, rng, args.count):
            c = color_catalog(g, p, stats)
            bad += not verify(g, c, p.extra_colors)
        dt = time.perf_counter() - t0
        print(f"{pid}  {args.count} graphs  {dt:.2f}s  tiers {dict(sorted(stats.tiers.items()))}")
        for name, n in Counter(stats.patterns).most_common():
            print(f"    {n:6d}  {name}")
    print("all colorings verified" if not bad else f"{bad} colorings rejected")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
