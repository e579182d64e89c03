"""Generic colorer for ``mad(G) < k`` with a large maximum degree.

With ``t = ceil((1 + alpha) k)`` and ``d = max(Delta, required_delta(k, alpha))``
the target is a ``(d + t - 1, t - 1)``-coloring. A vertex ``u`` of degree
``p <= k - 1`` with at most ``t - p`` neighbors of degree ``>= d - k + 2`` can
always be deleted and put back; the discharging argument guarantees such a
vertex exists while the graph is nonempty. Re-insertion colors the ``f``
incidences, then the ``e`` incidences in decreasing index, then the ``g``
incidences, each greedily with the smallest legal color.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExtensionExhausted, HypothesisViolation, PeelStalled
from .graph import Graph
from .incidence import Incidence, IncidenceColoring, verify
from .mad import satisfies_mad_bound
from .search import ColoringState
from .degenerate import complete_palette


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def required_delta(k: int, alpha) -> int:
    """Smallest maximum degree for which the generic bound is proved."""
    alpha = Fraction(alpha)
    if k < 1 or alpha < 0:
        raise ValueError("need k >= 1 and alpha >= 0")
    if alpha == 0:
        return ceil_frac(Fraction(k * k, 2) + Fraction(3 * k, 2) - 2)
    return ceil_frac((3 * alpha + 1) / (2 * alpha) * k - 2)


@dataclass(frozen=True)
class Budget:
    k: int
    alpha: Fraction
    d: int

    @property
    def t(self) -> int:
        return ceil_frac((1 + self.alpha) * self.k)

    @property
    def num_colors(self) -> int:
        return self.d + self.t - 1

    @property
    def weak_cap(self) -> int:
        return self.t - 1

    @property
    def high_degree(self) -> int:
        """Neighbors at or above this degree count against reducibility."""
        return self.d - self.k + 2

    @classmethod
    def for_graph(cls, g: Graph, k: int, alpha) -> "Budget":
        alpha = Fraction(alpha)
        return cls(k, alpha, max(g.max_degree, required_delta(k, alpha)))


@dataclass
class ExtensionPlan:
    u: int
    p: int
    s: int
    neighbors: list[int]
    strong_sets: list[set[int]]
    palettes: list[list[int]]

    def e(self, g: Graph, i: int) -> Incidence:
        return Incidence(g.edge_index(self.u, self.neighbors[i]), self.u)

    def far(self, g: Graph, i: int) -> Incidence:
        """``f_i`` for ``i < s`` and ``g_i`` beyond (0-based)."""
        v = self.neighbors[i]
        return Incidence(g.edge_index(self.u, v), v)


def _reducible(adj: list[dict[int, int]], alive: list[bool], b: Budget) -> int | None:
    for u in range(len(adj)):
        if not alive[u]:
            continue
        p = len(adj[u])
        if p > b.k - 1:
            continue
        high = sum(1 for w in adj[u] if len(adj[w]) >= b.high_degree)
        if high <= b.t - p:
            return u
    return None


def find_reducible_vertex(g: Graph, b: Budget) -> int | None:
    """Smallest vertex of degree ``p <= k-1`` with at most ``t - p`` high-degree neighbors."""
    adj = [{w: 0 for w in g.neighbors(v)} for v in range(g.n)]
    return _reducible(adj, [True] * g.n, b)


def plan_extension(state: ColoringState, u: int, b: Budget) -> ExtensionPlan:
    nbrs = sorted(state.adj[u], key=lambda v: (-state.degree(v), v))
    p = len(nbrs)
    s = b.t - p
    strong_sets, palettes = [], []
    for v in nbrs:
        S = state.strong_colors(v)
        A = state.weak_colors(v)
        if len(S) != state.degree(v) - 1 or len(S) > b.d - 1 or len(A) > b.weak_cap or S & A:
            raise ExtensionExhausted(f"palette invariant broken at neighbor {v} of {u}",
                                     {"u": u, "v": v, "strong": sorted(S), "weak": sorted(A)})
        W = complete_palette(A, S, b.weak_cap, b.num_colors)
        if len(W) != b.weak_cap:
            raise ExtensionExhausted(f"cannot complete weak palette of {v}", {"u": u, "v": v})
        strong_sets.append(S)
        palettes.append(W)
    return ExtensionPlan(u, p, s, nbrs, strong_sets, palettes)


def _need(ok: bool, what: str, plan: ExtensionPlan) -> None:
    if not ok:
        raise ExtensionExhausted(f"{what} (vertex {plan.u})",
                                 {"u": plan.u, "neighbors": plan.neighbors, "s": plan.s})


def extend_at(state: ColoringState, plan: ExtensionPlan, b: Budget) -> dict[Incidence, int]:
    g = state.g
    chosen: dict[Incidence, int] = {}
    every = range(1, b.num_colors + 1)
    at_u: set[int] = set()  # colors already on incidences of u
    for i in range(min(plan.s, plan.p)):
        W, S = set(plan.palettes[i]), plan.strong_sets[i]
        cands = [c for c in every if c not in W and c not in S]
        _need(len(cands) >= 1, "f has no free color", plan)
        inc = plan.far(g, i)
        chosen[inc] = cands[0]
        state.assign(inc, cands[0])
        at_u.add(cands[0])
    strong_u: set[int] = set()
    for i in reversed(range(plan.p)):
        base = [c for c in plan.palettes[i] if c not in at_u - strong_u]
        floor = plan.p if i < plan.s else plan.p - 1
        _need(len(base) >= floor, f"e_{i + 1} has fewer than {floor} candidates", plan)
        cands = [c for c in base if c not in strong_u]
        _need(len(cands) >= 1, f"e_{i + 1} has no free color", plan)
        inc = plan.e(g, i)
        chosen[inc] = cands[0]
        state.assign(inc, cands[0])
        at_u.add(cands[0])
        strong_u.add(cands[0])
    for i in range(plan.s, plan.p):
        W, S = set(plan.palettes[i]), plan.strong_sets[i]
        outside = [c for c in every if c not in W and c not in S]
        _need(len(outside) >= b.k, f"g_{i + 1} has fewer than k colors", plan)
        cands = [c for c in outside if c not in strong_u]
        _need(len(cands) >= b.k - plan.p, f"g_{i + 1} lost too many colors", plan)
        inc = plan.far(g, i)
        chosen[inc] = cands[0]
        state.assign(inc, cands[0])
    for v in [plan.u, *plan.neighbors]:
        _need(state.vertex_ok(v), f"local check failed at {v}", plan)
    return chosen


def color_generic(g: Graph, k: int, alpha=0, trace: list[str] | None = None,
                  check_mad: bool = True, verify_steps: bool = False) -> IncidenceColoring:
    """Peel reducible vertices, then re-insert them with the three-group extension.

    Budget is ``(d + t - 1, t - 1)`` with ``d = max(Delta, required_delta(k, alpha))``.
    ``verify_steps`` re-runs the full partial verifier after every re-insertion.
    """
    alpha = Fraction(alpha)
    b = Budget.for_graph(g, k, alpha)
    if check_mad and g.m:
        chk = satisfies_mad_bound(g, k)
        if not chk:
            raise HypothesisViolation(f"mad(G) = {chk.value} is not below {k}", chk.witness)
    state = ColoringState(g, b.num_colors, b.weak_cap)
    alive = [True] * g.n
    stack: list[int] = []
    remaining = g.n
    while remaining:
        u = _reducible(state.adj, alive, b)
        if u is None:
            edges = sorted({tuple(sorted((x, y))) for x in range(g.n) if alive[x] for y in state.adj[x]})
            raise PeelStalled("no reducible vertex in a nonempty graph",
                              {"k": k, "alpha": str(alpha), "d": b.d, "edges": [list(e) for e in edges]})
        stack.append(u)
        alive[u] = False
        remaining -= 1
        for w in list(state.adj[u]):
            state.deactivate(state.adj[u][w])
    for u in reversed(stack):
        alive[u] = True
        for w in g.neighbors(u):
            if alive[w]:
                state.activate(g.edge_index(u, w))
        if not state.adj[u]:
            continue
        plan = plan_extension(state, u, b)
        chosen = extend_at(state, plan, b)
        if verify_steps:
            verdict = verify(g, state.snapshot(), b.weak_cap, partial=True)
            if not verdict:
                raise ExtensionExhausted(f"partial coloring rejected after re-inserting {u}: "
                                         f"{verdict.describe()}", {"u": u})
        if trace is not None:
            cols = " ".join(f"{tuple(i)}={c}" for i, c in sorted(chosen.items()))
            trace.append(f"u={u} p={plan.p} s={plan.s} {cols}")
    return state.snapshot()
