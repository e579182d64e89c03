"""(Delta + 2k - 1, k)-colorings of k-degenerate graphs.

Vertices are re-inserted in reverse smallest-last order, so each one comes
back with at most ``k`` neighbors. Every neighbor ``v`` keeps a weak-palette
container of ``k`` colors disjoint from its strong colors; the new strong
incidences ``(u, uv)`` are drawn from those containers and the new weak ones
``(v, uv)`` avoid everything around ``v`` and ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolation
from .graph import Graph, degeneracy_order, k_core
from .incidence import Incidence, IncidenceColoring
from .search import ColoringState


@dataclass
class PeelStack:
    """Removed vertices in removal order with their neighbors at removal time."""

    entries: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)

    def push(self, v: int, nbrs) -> None:
        self.entries.append((v, tuple(sorted(nbrs))))

    def unwind(self):
        return reversed(self.entries)


@dataclass
class DegenerateStats:
    backtracks: int = 0
    insertions: int = 0


def complete_palette(used: set[int], strong: set[int], size: int, num_colors: int) -> list[int]:
    """Pad ``used`` with the smallest colors outside ``used | strong`` up to ``size``."""
    out = sorted(used)
    c = 1
    while len(out) < size and c <= num_colors:
        if c not in used and c not in strong:
            out.append(c)
        c += 1
    return out


def build_peel_stack(g: Graph, k: int) -> PeelStack:
    order = degeneracy_order(g)
    if order.degeneracy > k:
        core = k_core(g, k + 1)
        raise HypothesisViolation(
            f"graph is {order.degeneracy}-degenerate, not {k}-degenerate", witness=core)
    pos = {v: i for i, v in enumerate(order.order)}
    stack = PeelStack()
    for v in order.order:
        stack.push(v, [w for w in g.neighbors(v) if pos[w] > pos[v]])
    return stack


def color_degenerate(g: Graph, k: int, stats: DegenerateStats | None = None) -> IncidenceColoring:
    if k < 1:
        raise ValueError("k must be at least 1")
    stack = build_peel_stack(g, k)
    delta = g.max_degree
    num_colors = max(delta + 2 * k - 1, 1)
    state = ColoringState(g, num_colors, weak_cap=k, active_edges=())
    stats = stats if stats is not None else DegenerateStats()
    for u, nbrs in stack.unwind():
        stats.insertions += 1
        if not nbrs:
            continue
        for v in nbrs:
            state.activate(g.edge_index(u, v))
        if not _greedy_insert(state, u, nbrs, k):
            stats.backtracks += 1
            incs = [Incidence(g.edge_index(u, v), x) for v in nbrs for x in (u, v)]
            found, _ = state.extend(incs)
            if not found:  # pragma: no cover - excluded by the counting argument
                raise AssertionError(f"no extension at vertex {u}")
    return state.snapshot()


def _greedy_insert(state: ColoringState, u: int, nbrs, k: int) -> bool:
    g = state.g
    placed: list[Incidence] = []
    ok = True
    strong_u: set[int] = set()
    for v in nbrs:
        inc = Incidence(g.edge_index(u, v), u)
        pal = complete_palette(state.weak_colors(v), state.strong_colors(v), k, state.num_colors)
        pick = next((c for c in pal if c not in strong_u and state.can_take(inc, c)), None)
        if pick is None:
            ok = False
            break
        state.assign(inc, pick)
        placed.append(inc)
        strong_u.add(pick)
    if ok:
        for v in nbrs:
            inc = Incidence(g.edge_index(u, v), v)
            pick = next((c for c in range(1, state.num_colors + 1) if state.can_take(inc, c)), None)
            if pick is None:
                ok = False
                break
            state.assign(inc, pick)
            placed.append(inc)
    if not ok:
        for inc in placed:
            state.unassign(inc)
    return ok
