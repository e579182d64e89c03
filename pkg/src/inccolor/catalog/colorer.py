"""Peel-and-repair coloring driven by a theorem profile.

Peeling deletes the element named by the first matching configuration until
no edge is left. Unwinding puts elements back one at a time and extends the
coloring with a tiered local search:

1. color only the re-inserted incidences, exhaustively;
2. additionally free one, then two, then all already-colored incidences at
   the endpoints of the re-inserted edges, preferring their old colors;
3. give up with :class:`ExtensionExhausted`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from ..errors import ExtensionExhausted, HypothesisViolation, PeelStalled
from ..graph import Graph
from ..incidence import Incidence, IncidenceColoring
from ..mad import satisfies_mad_bound
from ..search import ColoringState, NodeLimit
from .configurations import Match, find_configuration, find_in
from .profiles import TheoremProfile

TIER1_NODES = 200_000
TIER2_NODES = 5_000
JOINT_NODES = 200_000


@dataclass(frozen=True)
class Reduction:
    kind: str  # "vertex" or "edge"
    element: tuple[int, ...]
    edges: tuple[int, ...]
    pattern: str


@dataclass
class CatalogStats:
    tiers: Counter = field(default_factory=Counter)
    patterns: Counter = field(default_factory=Counter)
    recolored: int = 0


def _stall_artifact(state: ColoringState, profile: TheoremProfile, k: int) -> dict:
    edges = sorted({state.g.edges[e] for v in range(state.g.n) for e in state.adj[v].values()})
    return {"profile": profile.id, "k": k, "n": state.g.n, "edges": [list(e) for e in edges]}


def peel(state: ColoringState, profile: TheoremProfile, k: int,
         stats: CatalogStats | None = None) -> list[Reduction]:
    """Delete configurations until the active graph has no edges; returns the removal log."""
    g = state.g
    log: list[Reduction] = []
    active = sum(len(a) for a in state.adj) // 2
    while active:
        match = find_in(state.adj, profile, k)
        if match is None:
            raise PeelStalled(f"no {profile.id} configuration in a nonempty graph",
                              _stall_artifact(state, profile, k))
        kind, element = match.removal
        if kind == "vertex":
            edges = tuple(sorted(state.adj[element[0]].values()))
        else:
            edges = (g.edge_index(*element),)
        for e in edges:
            state.deactivate(e)
        active -= len(edges)
        log.append(Reduction(kind, element, edges, match.pattern.name))
        if stats is not None:
            stats.patterns[match.pattern.name] += 1
    return log


def _variables(state: ColoringState, red: Reduction) -> list[Incidence]:
    g = state.g
    return sorted(Incidence(e, x) for e in red.edges for x in g.edges[e])


def _radius(state: ColoringState, red: Reduction, fresh: set[Incidence]) -> list[Incidence]:
    ends = sorted({x for e in red.edges for x in state.g.edges[e]})
    out = set()
    for v in ends:
        for inc in state.incidences_at(v):
            if inc in state.color and inc not in fresh:
                out.add(inc)
    return sorted(out)


def _try(state: ColoringState, variables, freed, limit) -> bool:
    old = {inc: state.unassign(inc) for inc in freed}
    try:
        found, _ = state.extend(list(variables) + list(freed), node_limit=limit, preferred=old)
    except NodeLimit:
        found = False
    if not found:
        for inc, c in old.items():
            state.assign(inc, c)
    return found


def repair_extend(state: ColoringState, red: Reduction, max_depth: int = 2) -> int:
    """Color the incidences of a re-inserted element; returns the tier that succeeded."""
    variables = _variables(state, red)
    try:
        found, _ = state.extend(variables, node_limit=TIER1_NODES)
    except NodeLimit:
        found = False
    if found:
        return 1
    radius = _radius(state, red, set(variables))
    for depth in range(1, max_depth + 1):
        for freed in combinations(radius, depth):
            if _try(state, variables, freed, TIER2_NODES):
                return 2
    if _try(state, variables, radius, JOINT_NODES):
        return 2
    raise ExtensionExhausted(
        f"could not re-insert {red.kind} {list(red.element)} ({red.pattern})",
        {"reduction": {"kind": red.kind, "element": list(red.element), "pattern": red.pattern},
         "num_colors": state.num_colors, "weak_cap": state.weak_cap,
         "edges": [list(state.g.edges[e]) for v in range(state.g.n)
                   for e in state.adj[v].values() if state.g.edges[e][0] == v],
         "partial": [[list(state.g.edges[i.edge]), i.at, c] for i, c in sorted(state.color.items())]})


def color_catalog(g: Graph, profile: TheoremProfile, stats: CatalogStats | None = None,
                  check_mad: bool = True) -> IncidenceColoring:
    """A (max(Delta, k_floor) + c, c)-coloring for graphs below the profile's mad bound."""
    if check_mad and g.m:
        chk = satisfies_mad_bound(g, profile.mad_bound)
        if not chk:
            raise HypothesisViolation(
                f"mad(G) = {chk.value} is not below {profile.mad_bound}", chk.witness)
    k = profile.working_k(g.max_degree)
    num_colors, cap = profile.budget(g.max_degree)
    state = ColoringState(g, num_colors, cap)
    log = peel(state, profile, k, stats)
    for red in reversed(log):
        for e in red.edges:
            state.activate(e)
        tier = repair_extend(state, red)
        if stats is not None:
            stats.tiers[tier] += 1
    return state.snapshot()


@dataclass(frozen=True)
class ReducibilityVerdict:
    ok: bool
    match: Match | None
    artifact: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def assert_reducible(g: Graph, profile: TheoremProfile, check_mad: bool = True) -> ReducibilityVerdict:
    """Every edge-carrying graph below the mad bound must contain a catalog configuration."""
    if check_mad and g.m:
        chk = satisfies_mad_bound(g, profile.mad_bound)
        if not chk:
            raise HypothesisViolation(
                f"mad(G) = {chk.value} is not below {profile.mad_bound}", chk.witness)
    if not g.m:
        return ReducibilityVerdict(True, None)
    match = find_configuration(g, profile)
    if match is not None:
        return ReducibilityVerdict(True, match)
    return ReducibilityVerdict(False, None, {
        "profile": profile.id, "k": profile.working_k(g.max_degree),
        "n": g.n, "edges": [list(e) for e in g.edges]})
