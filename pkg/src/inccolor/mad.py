"""Exact maximum average degree.

``mad`` runs a rational bisection on the density, deciding each guess with a
min-cut on the edge/vertex selection network (maximize ``2|E(S)| - lam |S|``).
All capacities are scaled to integers, so nothing here touches floats.
``mad_oracle`` is the brute-force subset enumeration used to check it.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import InstanceTooLarge
from .graph import Graph

ORACLE_MAX_N = 20


class MadResult(NamedTuple):
    value: Fraction
    witness: tuple[int, ...]


class BoundCheck(NamedTuple):
    holds: bool
    witness: tuple[int, ...] | None
    value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.holds


class _FlowNetwork:
    """Dinic's algorithm on integer capacities."""

    def __init__(self, size: int) -> None:
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for a in self.head[x]:
                if self.cap[a] > 0 and level[self.to[a]] < 0:
                    level[self.to[a]] = level[x] + 1
                    q.append(self.to[a])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.size

            def push(x: int, f: int) -> int:
                if x == t:
                    return f
                arcs = head[x]
                while it[x] < len(arcs):
                    a = arcs[it[x]]
                    y = to[a]
                    if cap[a] > 0 and level[y] == level[x] + 1:
                        got = push(y, min(f, cap[a]))
                        if got:
                            cap[a] -= got
                            cap[a ^ 1] += got
                            return got
                    it[x] += 1
                return 0

            while True:
                f = push(s, 1 << 62)
                if not f:
                    break
                total += f

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for a in self.head[x]:
                if self.cap[a] > 0 and self.to[a] not in seen:
                    seen.add(self.to[a])
                    stack.append(self.to[a])
        return seen

    def not_reaching_sink(self, t: int) -> set[int]:
        reach = {t}
        stack = [t]
        while stack:
            y = stack.pop()
            for a in self.head[y]:
                # residual arc x -> y is the reverse of arc a (y -> x)
                x = self.to[a]
                if self.cap[a ^ 1] > 0 and x not in reach:
                    reach.add(x)
                    stack.append(x)
        return set(range(self.size)) - reach


def _density_cut(g: Graph, lam: Fraction) -> tuple[Fraction, tuple[int, ...], tuple[int, ...]]:
    """Return (max of 2|E(S)| - lam|S|, minimal maximizer, maximal maximizer)."""
    a, b = lam.numerator, lam.denominator
    n, m = g.n, g.m
    s, t = 0, 1
    net = _FlowNetwork(2 + n + m)
    big = 2 * b * m + a * n + 1
    for i, (u, v) in enumerate(g.edges):
        node = 2 + n + i
        net.add_edge(s, node, 2 * b)
        net.add_edge(node, 2 + u, big)
        net.add_edge(node, 2 + v, big)
    if a > 0:
        for v in range(n):
            net.add_edge(2 + v, t, a)
    flow = net.max_flow(s, t)
    best = Fraction(2 * b * m - flow, b)
    low = net.source_side(s)
    high = net.not_reaching_sink(t)
    minimal = tuple(v for v in range(n) if 2 + v in low)
    maximal = tuple(v for v in range(n) if 2 + v in high)
    return best, minimal, maximal


def density(g: Graph, vertices) -> Fraction:
    vs = set(vertices)
    return Fraction(2 * g.induced_edge_count(vs), len(vs))


def mad(g: Graph) -> MadResult:
    """Maximum of ``2|E(H)|/|V(H)|`` over nonempty subgraphs, with a densest vertex set.

    Candidate values have denominators at most ``n``, so two distinct ones
    differ by at least ``1/(n(n-1))``; bisection stops once the bracket is
    narrower than that and the last feasible cut's vertex set is exact.
    """
    if g.m == 0:
        return MadResult(Fraction(0), (0,) if g.n else ())
    n = g.n
    lo, hi = Fraction(0), Fraction(g.max_degree)
    witness = tuple(range(n))
    gap = Fraction(1, n * (n - 1))
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        best, minimal, _ = _density_cut(g, mid)
        if best > 0:
            lo, witness = mid, minimal
        else:
            hi = mid
    return MadResult(density(g, witness), witness)


def mad_oracle(g: Graph) -> Fraction:
    """Brute force over every nonempty vertex subset; refuses ``n > 20``."""
    if g.n > ORACLE_MAX_N:
        raise InstanceTooLarge(f"mad_oracle handles n <= {ORACLE_MAX_N}, got {g.n}")
    if g.n == 0:
        return Fraction(0)
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
    best = Fraction(0)
    for subset in range(1, 1 << g.n):
        e = 0
        size = 0
        x = subset
        while x:
            low = x & -x
            v = low.bit_length() - 1
            e += bin(masks[v] & subset).count("1")
            size += 1
            x ^= low
        val = Fraction(2 * e, size)
        if val > best:
            best = val
    return best


def mad_oracle_witness(g: Graph) -> MadResult:
    """Slower combinatorial variant that also reports a smallest densest set."""
    if g.n > ORACLE_MAX_N:
        raise InstanceTooLarge(f"mad_oracle handles n <= {ORACLE_MAX_N}, got {g.n}")
    best, arg = Fraction(-1), ()
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            val = density(g, vs)
            if val > best:
                best, arg = val, vs
    return MadResult(best, arg)


def satisfies_mad_bound(g: Graph, bound) -> BoundCheck:
    """True iff ``mad(g) < bound``. On failure the densest witness set is attached."""
    bound = Fraction(bound)
    if g.m == 0:
        return BoundCheck(bound > 0, None if bound > 0 else ((0,) if g.n else ()))
    if bound <= 0:
        r = mad(g)
        return BoundCheck(False, r.witness, r.value)
    best, _, maximal = _density_cut(g, bound)
    if best < 0 or (best == 0 and not maximal):
        return BoundCheck(True, None)
    r = mad(g)
    return BoundCheck(False, r.witness, r.value)
