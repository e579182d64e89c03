"""Deterministic graph generators.

Every generator takes an explicit ``random.Random`` (or a seed through
:func:`generate`), so identical ``(kind, seed)`` pairs give identical edge
sequences.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction

import networkx as nx

from .errors import GenerationError
from .graph import Graph
from .mad import satisfies_mad_bound

HUB_SPARSE_ATTEMPTS = 200


def path(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycle needs n >= 3")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def star(n: int) -> Graph:
    """Center 0 with ``n`` leaves ``1..n``."""
    return Graph.from_edges([(0, i) for i in range(1, n + 1)], n=n + 1)


def complete(n: int) -> Graph:
    return Graph.from_edges([(u, v) for u in range(n) for v in range(u + 1, n)], n=n)


def grid(a: int, b: int) -> Graph:
    """``a`` rows by ``b`` columns; vertex ``r*b + c``. Planar and triangle-free."""
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return Graph.from_edges(edges, n=a * b)


def grid_apex(a: int, b: int, rng: random.Random | None = None, drop: float = 0.0) -> Graph:
    """Grid plus an outer apex joined to the boundary vertices of even parity.

    The apex sits in the outer face and only sees one side of the grid's
    bipartition, so the result stays planar and triangle-free. With ``drop > 0``
    each grid edge is removed independently with that probability.
    """
    base = grid(a, b)
    edges = list(base.edges)
    if rng is not None and drop > 0:
        edges = [e for e in edges if rng.random() >= drop]
    apex = a * b
    for r in range(a):
        for c in range(b):
            on_boundary = r in (0, a - 1) or c in (0, b - 1)
            if on_boundary and (r + c) % 2 == 0:
                edges.append((apex, r * b + c))
    return Graph.from_edges(edges, n=a * b + 1)


def _relabel(n: int, edges, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges([(perm[u], perm[v]) for u, v in edges], n=n)


def random_degenerate(n: int, k: int, rng: random.Random) -> Graph:
    """Each vertex joins up to ``k`` earlier vertices, so degeneracy is at most ``k``."""
    edges = []
    for v in range(1, n):
        q = min(v, rng.randint(1, k))
        for w in rng.sample(range(v), q):
            edges.append((w, v))
    return _relabel(n, edges, rng)


def _hub_sparse_once(n: int, delta: int, target: Fraction, rng: random.Random) -> Graph:
    # back-degree <= q on every vertex forces mad < 2q
    q_safe = max(1, int(target // 2))
    slack = target / 2 - q_safe
    p_extra = float(min(slack, Fraction(1))) * 0.8 if slack > 0 else 0.0
    hubs = set(range(1, max(2, n // 12)))
    star_members = set(rng.sample(range(1, n), delta))
    deg = [0] * n
    edges = []
    for v in range(1, n):
        q = q_safe + (1 if rng.random() < p_extra else 0)
        chosen: list[int] = []
        if v in star_members:
            chosen.append(0)
            q -= 1
        pool = [w for w in range(1, v) if deg[w] < delta]
        hub_pool = [w for w in pool if w in hubs]
        while q > 0 and pool:
            src = hub_pool if hub_pool and rng.random() < 0.5 else pool
            w = rng.choice(src)
            chosen.append(w)
            pool.remove(w)
            if w in hub_pool:
                hub_pool.remove(w)
            q -= 1
        for w in chosen:
            edges.append((w, v))
            deg[w] += 1
            deg[v] += 1
    return _relabel(n, edges, rng)


def hub_sparse(n: int, delta: int, mad_target, rng: random.Random,
               attempts: int = HUB_SPARSE_ATTEMPTS) -> Graph:
    """Sparse graph with one hub of degree exactly ``delta`` and ``mad < mad_target``.

    A spanning forest grows in vertex order; some vertices take an extra back
    edge, and ``delta`` of them attach their first edge to the hub. Each try is
    checked with the exact mad routine and retried on failure.
    """
    target = Fraction(mad_target)
    if n < delta + 1:
        raise GenerationError(f"hub_sparse needs n > delta (n={n}, delta={delta})")
    if target <= 2:
        raise GenerationError("hub_sparse needs mad_target > 2")
    for _ in range(attempts):
        g = _hub_sparse_once(n, delta, target, rng)
        if g.max_degree == delta and satisfies_mad_bound(g, target):
            return g
    raise GenerationError(f"hub_sparse({n}, {delta}, {target}) failed after {attempts} attempts")


def regular_hubs(n: int, r: int, hubs: int, delta: int, mad_target, rng: random.Random,
                 attempts: int = HUB_SPARSE_ATTEMPTS) -> Graph:
    """Random ``r``-regular base on ``n`` vertices plus ``hubs`` hubs of degree ``delta``.

    Minimum degree is ``r``, so unlike :func:`hub_sparse` there are no
    pendant or degree-2 vertices to peel. Hubs attach to distinct base vertices;
    each try is kept only if ``mad < mad_target`` holds exactly and the maximum
    degree is ``delta``.
    """
    target = Fraction(mad_target)
    if delta > n or (n * r) % 2 or r >= n:
        raise GenerationError(f"regular_hubs({n}, {r}, {hubs}, {delta}) is not realizable")
    if Fraction(r * n + 2 * hubs * delta, n + hubs) >= target:
        raise GenerationError(f"regular_hubs({n}, {r}, {hubs}, {delta}) has average degree >= {target}")
    for _ in range(attempts):
        base = nx.random_regular_graph(r, n, seed=rng.randrange(2**32))
        edges = [tuple(e) for e in base.edges()]
        load = [r] * n
        for h in range(hubs):
            hub = n + h
            pool = [v for v in range(n) if load[v] < delta]
            if len(pool) < delta:
                break
            for v in rng.sample(pool, delta):
                edges.append((v, hub))
                load[v] += 1
        g = _relabel(n + hubs, edges, rng)
        if g.max_degree == delta and satisfies_mad_bound(g, target):
            return g
    raise GenerationError(
        f"regular_hubs({n}, {r}, {hubs}, {delta}, {target}) failed after {attempts} attempts")


_KIND = re.compile(r"^\s*([a-z_]+)\s*\(([^)]*)\)\s*$")


def parse_kind(kind: str) -> tuple[str, list[str]]:
    m = _KIND.match(kind)
    if not m:
        raise GenerationError(f"bad generator kind {kind!r}; expected name(arg, ...)")
    args = [a.strip() for a in m.group(2).split(",") if a.strip()]
    return m.group(1), args


def generate(kind: str, seed: int = 0) -> Graph:
    """Build a graph from a kind string such as ``"hub_sparse(40,12,4)"``."""
    name, args = parse_kind(kind)
    rng = random.Random(seed)
    try:
        if name == "path":
            return path(int(args[0]))
        if name == "cycle":
            return cycle(int(args[0]))
        if name == "star":
            return star(int(args[0]))
        if name == "complete":
            return complete(int(args[0]))
        if name == "grid":
            return grid(int(args[0]), int(args[1]))
        if name == "grid_apex":
            drop = float(Fraction(args[2])) if len(args) > 2 else 0.0
            return grid_apex(int(args[0]), int(args[1]), rng, drop)
        if name == "hub_sparse":
            return hub_sparse(int(args[0]), int(args[1]), Fraction(args[2]), rng)
        if name == "regular_hubs":
            return regular_hubs(int(args[0]), int(args[1]), int(args[2]), int(args[3]),
                                Fraction(args[4]), rng)
        if name == "random_degenerate":
            return random_degenerate(int(args[0]), int(args[1]), rng)
    except (IndexError, ValueError) as exc:
        raise GenerationError(f"bad arguments for {name}: {args} ({exc})") from None
    raise GenerationError(f"unknown generator {name!r}")
