"""Exact incidence chromatic number and (k, l)-feasibility by backtracking.

Meant for small instances only (at most ``MAX_INCIDENCES`` incidences). The
search walks the incidences in a fixed order and breaks color symmetry by
only opening a new color one past the largest used so far.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLarge, SearchInconclusive
from .graph import Graph
from .incidence import Incidence, IncidenceColoring, all_incidences, conflicts, other_end

MAX_INCIDENCES = 40
DEFAULT_NODE_LIMIT = 5_000_000


@dataclass(frozen=True)
class ChiResult:
    chi_i: int
    witness: IncidenceColoring
    nodes_explored: int


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: IncidenceColoring | None
    nodes_explored: int

    def __bool__(self) -> bool:
        return self.feasible


class _Limit(Exception):
    pass


def _check_size(g: Graph) -> None:
    if 2 * g.m > MAX_INCIDENCES:
        raise InstanceTooLarge(f"{2 * g.m} incidences exceeds the cap of {MAX_INCIDENCES}")


def search_order(g: Graph) -> list[Incidence]:
    """Incidences by decreasing conflict degree, ties by ``(edge, at)``."""
    incs = all_incidences(g)
    deg = {inc: len(conflicts(g, inc)) for inc in incs}
    return sorted(incs, key=lambda i: (-deg[i], i.edge, i.at))


def _search(g: Graph, k: int, ell: int, node_limit: int | None):
    order = search_order(g)
    pos = {inc: i for i, inc in enumerate(order)}
    # only conflicts earlier in the order matter when a variable is assigned
    earlier = [[pos[o] for o in conflicts(g, inc) if pos[o] < i] for i, inc in enumerate(order)]
    weak_at = [other_end(g, inc) for inc in order]
    colors = [0] * len(order)
    weak: list[dict[int, int]] = [{} for _ in range(g.n)]
    nodes = 0

    def rec(i: int, top: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        y = weak_at[i]
        pal = weak[y]
        for c in range(1, min(k, top + 1) + 1):
            if any(colors[j] == c for j in earlier[i]):
                continue
            if ell and c not in pal and len(pal) >= ell:
                continue
            if node_limit is not None and nodes >= node_limit:
                raise _Limit
            nodes += 1
            colors[i] = c
            pal[c] = pal.get(c, 0) + 1
            if rec(i + 1, max(top, c)):
                return True
            pal[c] -= 1
            if not pal[c]:
                del pal[c]
            colors[i] = 0
        return False

    try:
        found = rec(0, 0)
    except _Limit:
        return None, nodes
    if not found:
        return False, nodes
    assignment = {inc: colors[i] for i, inc in enumerate(order)}
    return IncidenceColoring(assignment, k, ell), nodes


def feasible(g: Graph, k: int, ell: int = 0,
             node_limit: int | None = DEFAULT_NODE_LIMIT) -> FeasibilityResult:
    """Decide whether ``g`` has an incidence ``(k, ell)``-coloring; ``ell = 0`` means no cap."""
    _check_size(g)
    if not g.m:
        return FeasibilityResult(True, IncidenceColoring({}, k, ell), 0)
    res, nodes = _search(g, k, ell, node_limit)
    if res is None:
        raise SearchInconclusive(f"node limit {node_limit} reached at k={k}, ell={ell}",
                                 nodes=nodes)
    if res is False:
        return FeasibilityResult(False, None, nodes)
    return FeasibilityResult(True, res, nodes)


def chi_incidence(g: Graph, node_limit: int | None = DEFAULT_NODE_LIMIT) -> ChiResult:
    """Smallest ``k`` with an incidence ``k``-coloring, counting up from ``Delta + 1``.

    ``node_limit`` bounds the total nodes over all values of ``k``.
    """
    _check_size(g)
    if not g.m:
        return ChiResult(0, IncidenceColoring({}, 0), 0)
    total = 0
    k = g.max_degree + 1
    while True:
        left = None if node_limit is None else node_limit - total
        res, nodes = _search(g, k, 0, left)
        total += nodes
        if res is None:
            raise SearchInconclusive(
                f"node limit {node_limit} reached while testing k={k}",
                lower=k, upper=2 * g.max_degree, nodes=total)
        if res is not False:
            return ChiResult(k, res, total)
        k += 1
