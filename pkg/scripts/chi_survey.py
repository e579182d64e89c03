#!/usr/bin/env python3
"""Exact incidence chromatic numbers of small connected graphs, grouped by Delta.

Reports how often chi_i hits the lower bound Delta + 1 and checks the
upper bound 2 * Delta on every instance.

    python scripts/chi_survey.py --count 300 --seed 0
"""

import argparse
import random
import sys
from collections import Counter, defaultdict

from inccolor.exact import MAX_INCIDENCES, chi_incidence
from inccolor.graph import Graph


def connected(rng, n, m):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    rng.shuffle(rest)
    edges |= set(rest[:max(0, m - len(edges))])
    return Graph.from_edges(sorted(edges), n=n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    table: dict[int, Counter] = defaultdict(Counter)
    violations = 0
    for _ in range(args.count):
        n = rng.randint(3, 10)
        m = rng.randint(n - 1, min(MAX_INCIDENCES // 2, n * (n - 1) // 2))
        g = connected(rng, n, m)
        r = chi_incidence(g)
        d = g.max_degree
        violations += not d + 1 <= r.chi_i <= 2 * d
        table[d][r.chi_i - d] += 1
    print("Delta  chi_i-Delta counts")
    for d in sorted(table):
        row = "  ".join(f"+{k}:{v}" for k, v in sorted(table[d].items()))
        print(f"{d:>5}  {row}")
    print(f"{violations} instances outside [Delta+1, 2 Delta]")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
