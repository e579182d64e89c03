#!/usr/bin/env python3
"""Search for a re-insertion where plain extension fails but local recoloring works.

Builds small graphs around a ((D-2)-,(D-1)-,D-)-vertex v (the T1 edge
reduction), colors ``H - v u1`` at random with the T1 budget, and checks
whether putting ``v u1`` back needs tier 2. Prints the first hit as JSON,
ready to paste into a regression test.

    python scripts/find_tier2_instance.py --tries 20000 --seed 1
"""

import argparse
import json
import random
import sys

from inccolor.catalog import PROFILES
from inccolor.catalog.colorer import Reduction, repair_extend
from inccolor.graph import Graph
from inccolor.incidence import Incidence, verify
from inccolor.search import ColoringState


def build(rng: random.Random, k: int) -> tuple[Graph, int, int]:
    # v = 0, u1..u3 = 1..3, private neighbors after that, shared with probability
    edges = [(0, 1), (0, 2), (0, 3)]
    degs = {1: rng.randint(2, k - 2), 2: rng.randint(2, k - 1), 3: rng.randint(2, k)}
    nxt = 4
    pool: list[int] = []
    for u, d in degs.items():
        for _ in range(d - 1):
            if pool and rng.random() < 0.5:
                w = rng.choice(pool)
                if (u, w) in edges:
                    w = nxt
                    nxt += 1
            else:
                w = nxt
                nxt += 1
            pool.append(w)
            edges.append((u, w))
    for _ in range(rng.randint(0, 6)):
        a, b = rng.sample(range(4, nxt), 2) if nxt > 5 else (4, 4)
        if a != b:
            edges.append((a, b))
    g = Graph.from_edges(edges)
    return g, 0, 1


def random_coloring(state: ColoringState, incs, rng: random.Random) -> bool:
    rng.shuffle(incs)
    for inc in incs:
        cands = state.candidates(inc)
        if not cands:
            return False
        state.assign(inc, rng.choice(cands))
    return True


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tries", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    profile = PROFILES["T1"]
    for attempt in range(args.tries):
        g, v, u1 = build(rng, 7)
        if g.max_degree > 7 or g.degree(v) != 3:
            continue
        k = profile.working_k(g.max_degree)
        nc, cap = profile.budget(g.max_degree)
        e = g.edge_index(v, u1)
        state = ColoringState(g, nc, cap, active_edges=[i for i in range(g.m) if i != e])
        incs = [Incidence(i, x) for i in range(g.m) if i != e for x in g.edges[i]]
        if not random_coloring(state, incs, rng):
            continue
        before = dict(state.color)
        state.activate(e)
        red = Reduction("edge", (v, u1), (e,), "((D-2)-,(D-1)-,D-)-vertex")
        try:
            tier = repair_extend(state, red)
        except Exception as exc:  # pragma: no cover - would be a notable find
            print(f"attempt {attempt}: exhausted: {exc}", file=sys.stderr)
            continue
        if tier == 2:
            assert verify(g, state.snapshot(), cap)
            print(json.dumps({
                "edges": [list(x) for x in g.edges], "removed": [v, u1],
                "num_colors": nc, "weak_cap": cap, "k": k,
                "partial": [[list(g.edges[i.edge]), i.at, c] for i, c in sorted(before.items())],
            }))
            return 0
    print("no tier-2 instance found", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
