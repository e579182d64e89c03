"""Mutable partial colorings over a growing subgraph, plus a small extension search.

The colorers rebuild a graph piece by piece (unwinding a peel), so the state
tracks which edges are active. Color legality is answered in O(1) from
per-vertex counters of strong and weak colors.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .graph import Graph
from .incidence import Incidence, IncidenceColoring


class NodeLimit(Exception):
    pass


def _bump(counter: dict[int, int], c: int, delta: int) -> None:
    x = counter.get(c, 0) + delta
    if x:
        counter[c] = x
    else:
        del counter[c]


class ColoringState:
    """Partial incidence coloring of the active subgraph of ``g``."""

    def __init__(self, g: Graph, num_colors: int, weak_cap: int = 0,
                 active_edges: Iterable[int] | None = None) -> None:
        self.g = g
        self.num_colors = num_colors
        self.weak_cap = weak_cap
        self.adj: list[dict[int, int]] = [{} for _ in range(g.n)]
        self.color: dict[Incidence, int] = {}
        self.strong: list[dict[int, int]] = [{} for _ in range(g.n)]
        self.weak: list[dict[int, int]] = [{} for _ in range(g.n)]
        if active_edges is None:
            active_edges = range(g.m)
        for e in active_edges:
            self.activate(e)

    # -- structure ---------------------------------------------------------

    def activate(self, e: int) -> None:
        u, v = self.g.edges[e]
        self.adj[u][v] = e
        self.adj[v][u] = e

    def deactivate(self, e: int) -> None:
        u, v = self.g.edges[e]
        for x in (u, v):
            inc = Incidence(e, x)
            if inc in self.color:
                self.unassign(inc)
        del self.adj[u][v]
        del self.adj[v][u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def far(self, inc: Incidence) -> int:
        u, v = self.g.edges[inc.edge]
        return v if inc.at == u else u

    def incidences_at(self, v: int) -> list[Incidence]:
        """Strong and weak incidences of ``v`` in the active graph."""
        out = []
        for w, e in self.adj[v].items():
            out.append(Incidence(e, v))
            out.append(Incidence(e, w))
        return out

    # -- colors -------------------------------------------------------------

    def assign(self, inc: Incidence, c: int) -> None:
        assert inc not in self.color
        self.color[inc] = c
        _bump(self.strong[inc.at], c, 1)
        _bump(self.weak[self.far(inc)], c, 1)

    def unassign(self, inc: Incidence) -> int:
        c = self.color.pop(inc)
        _bump(self.strong[inc.at], c, -1)
        _bump(self.weak[self.far(inc)], c, -1)
        return c

    def can_take(self, inc: Incidence, c: int) -> bool:
        x, y = inc.at, self.far(inc)
        if c in self.strong[x] or c in self.weak[x] or c in self.strong[y]:
            return False
        cap = self.weak_cap
        return not cap or c in self.weak[y] or len(self.weak[y]) < cap

    def candidates(self, inc: Incidence) -> list[int]:
        return [c for c in range(1, self.num_colors + 1) if self.can_take(inc, c)]

    def strong_colors(self, v: int) -> set[int]:
        return set(self.strong[v])

    def weak_colors(self, v: int) -> set[int]:
        return set(self.weak[v])

    def vertex_ok(self, v: int) -> bool:
        """Local properness at ``v`` over colored incidences."""
        if any(cnt > 1 for cnt in self.strong[v].values()):
            return False
        if any(c in self.weak[v] for c in self.strong[v]):
            return False
        return not self.weak_cap or len(self.weak[v]) <= self.weak_cap

    def snapshot(self) -> IncidenceColoring:
        return IncidenceColoring(dict(self.color), self.num_colors, self.weak_cap)

    def load(self, assignment: Mapping[Incidence, int]) -> None:
        for inc, c in assignment.items():
            self.assign(inc, c)

    # -- search -------------------------------------------------------------

    def extend(self, variables: list[Incidence], node_limit: int | None = None,
               preferred: Mapping[Incidence, int] | None = None) -> tuple[bool, int]:
        """Color ``variables`` (all currently uncolored) by backtracking.

        Variables are picked by fewest remaining candidates, ties in list
        order; values ascend, except that a ``preferred`` color is tried first.
        Returns ``(found, nodes)``; on failure the state is left unchanged.
        Raises :class:`NodeLimit` when the budget runs out.
        """
        nodes = 0
        todo = list(variables)
        placed: list[Incidence] = []

        def rec() -> bool:
            nonlocal nodes
            if not todo:
                return True
            best_i, best_c = -1, None
            for i, inc in enumerate(todo):
                cs = self.candidates(inc)
                if best_c is None or len(cs) < len(best_c):
                    best_i, best_c = i, cs
                    if not cs:
                        return False
            inc = todo.pop(best_i)
            if preferred and preferred.get(inc) in best_c:
                best_c.remove(preferred[inc])
                best_c.insert(0, preferred[inc])
            for c in best_c:
                nodes += 1
                if node_limit is not None and nodes > node_limit:
                    todo.insert(best_i, inc)
                    raise NodeLimit
                self.assign(inc, c)
                placed.append(inc)
                if rec():
                    return True
                placed.pop()
                self.unassign(inc)
            todo.insert(best_i, inc)
            return False

        try:
            ok = rec()
        except NodeLimit:
            for inc in placed:
                self.unassign(inc)
            raise
        return ok, nodes
