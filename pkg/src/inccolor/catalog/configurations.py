"""Locating reducible configurations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

from ..graph import Graph
from .profiles import ConfigPattern, TheoremProfile


@dataclass(frozen=True)
class Match:
    pattern: ConfigPattern
    center: int
    bound_to: tuple[int, ...]  # neighbor matched to each of pattern.neighbors
    delta: int

    @property
    def removal(self) -> tuple[str, tuple[int, ...]]:
        if self.pattern.removal == "vertex":
            return "vertex", (self.center,)
        return "edge", (self.center, self.bound_to[self.pattern.edge_to])


def match_at(adj: Sequence[Collection[int]], pattern: ConfigPattern, v: int,
             delta: int) -> tuple[int, ...] | None:
    """Lexicographically smallest injective neighbor binding at center ``v``, if any."""
    if not adj[v] or not pattern.center.admits(len(adj[v]), delta):
        return None
    nbrs = sorted(adj[v])
    bounds = pattern.neighbors
    ok = [[w for w in nbrs if b.admits(len(adj[w]), delta)] for b in bounds]
    used: set[int] = set()
    picked: list[int] = []

    def rec(i: int) -> bool:
        if i == len(bounds):
            return True
        for w in ok[i]:
            if w not in used:
                used.add(w)
                picked.append(w)
                if rec(i + 1):
                    return True
                used.discard(w)
                picked.pop()
        return False

    return tuple(picked) if rec(0) else None


def find_in(adj: Sequence[Collection[int]], profile: TheoremProfile, delta: int) -> Match | None:
    for pattern in profile.catalog:
        for v in range(len(adj)):
            bound = match_at(adj, pattern, v, delta)
            if bound is not None:
                return Match(pattern, v, bound, delta)
    return None


def find_configuration(g: Graph, profile: TheoremProfile, delta: int | None = None) -> Match | None:
    """First catalog configuration present in ``g``.

    Delta-relative bounds are evaluated at ``delta``, which defaults to the
    working ``k = max(Delta(g), k_floor)`` that the colorer budgets with.
    """
    if delta is None:
        delta = profile.working_k(g.max_degree)
    return find_in(g.adjacency, profile, delta)


def recheck(g: Graph, match: Match) -> bool:
    """Independent re-validation of a match's degree bounds and injectivity."""
    p = match.pattern
    if not p.center.admits(g.degree(match.center), match.delta):
        return False
    if len(set(match.bound_to)) != len(match.bound_to):
        return False
    for w, b in zip(match.bound_to, p.neighbors):
        if not g.has_edge(match.center, w) or not b.admits(g.degree(w), match.delta):
            return False
    return True
