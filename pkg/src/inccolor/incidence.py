"""Incidences, their adjacency, forbidden colors, and the strict verifier.

An incidence ``(e, at)`` is edge ``e = uv`` seen from its endpoint ``at``.
For a vertex ``u`` the incidence ``(uv, u)`` is *strong* and ``(uv, v)`` is
*weak*. A coloring is proper when, at every vertex, each strong incidence
differs in color from every other incidence (strong or weak) of that vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import MalformedColoringError
from .graph import Graph


class Incidence(NamedTuple):
    edge: int
    at: int


def other_end(g: Graph, inc: Incidence) -> int:
    u, v = g.edges[inc.edge]
    return v if inc.at == u else u


def all_incidences(g: Graph) -> list[Incidence]:
    """Every incidence, sorted by (edge index, at)."""
    return [Incidence(i, x) for i, (u, v) in enumerate(g.edges) for x in (u, v)]


def incidences_of(g: Graph, v: int) -> tuple[set[Incidence], set[Incidence]]:
    """(strong, weak) incidences of ``v``."""
    strong, weak = set(), set()
    for w in g.neighbors(v):
        e = g.edge_index(v, w)
        strong.add(Incidence(e, v))
        weak.add(Incidence(e, w))
    return strong, weak


def adjacent(g: Graph, a: Incidence, b: Incidence) -> bool:
    """Pairwise adjacency straight from the definition.

    Same owner, same edge, or the edge joining the two owners is one of the
    two incidences' edges.
    """
    if a == b:
        return False
    if a.at == b.at or a.edge == b.edge:
        return True
    if g.has_edge(a.at, b.at):
        e = g.edge_index(a.at, b.at)
        return e == a.edge or e == b.edge
    return False


def conflicts(g: Graph, inc: Incidence) -> list[Incidence]:
    """Incidences adjacent to ``inc``: all incidences of its owner plus strong ones of the far end."""
    x, y = inc.at, other_end(g, inc)
    out = set()
    for w in g.neighbors(x):
        e = g.edge_index(x, w)
        out.add(Incidence(e, x))
        out.add(Incidence(e, w))
    for w in g.neighbors(y):
        out.add(Incidence(g.edge_index(y, w), y))
    out.discard(inc)
    return sorted(out)


@dataclass(frozen=True)
class IncidenceColoring:
    assignment: Mapping[Incidence, int]
    num_colors: int
    weak_cap: int = 0

    def __getitem__(self, inc: Incidence) -> int:
        return self.assignment[inc]

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def with_num_colors(self, k: int) -> "IncidenceColoring":
        return IncidenceColoring(self.assignment, k, self.weak_cap)

    def weak_palette(self, g: Graph, v: int) -> set[int]:
        return {self.assignment[Incidence(g.edge_index(v, w), w)] for w in g.neighbors(v)}


@dataclass(frozen=True)
class ForbiddenSet:
    colors: frozenset[int]
    weak_u: frozenset[int]
    strong_u: frozenset[int]
    strong_v: frozenset[int]


def forbidden_set(g: Graph, partial: Mapping[Incidence, int], inc: Incidence) -> ForbiddenSet:
    """Colors that the uncolored incidence ``(u, uv)`` cannot take.

    Union of colors on the weak incidences of ``u``, the strong incidences of
    ``u`` and the strong incidences of ``v``; uncolored incidences contribute nothing.
    """
    if isinstance(partial, IncidenceColoring):
        partial = partial.assignment
    u, v = inc.at, other_end(g, inc)
    weak_u, strong_u, strong_v = set(), set(), set()
    for w in g.neighbors(u):
        e = g.edge_index(u, w)
        c = partial.get(Incidence(e, w))
        if c is not None:
            weak_u.add(c)
        c = partial.get(Incidence(e, u))
        if c is not None:
            strong_u.add(c)
    for w in g.neighbors(v):
        c = partial.get(Incidence(g.edge_index(v, w), v))
        if c is not None:
            strong_v.add(c)
    return ForbiddenSet(frozenset(weak_u | strong_u | strong_v),
                        frozenset(weak_u), frozenset(strong_u), frozenset(strong_v))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    vertex: int | None = None
    pair: tuple[Incidence, Incidence] | None = None
    palette: tuple[int, ...] | None = None
    max_weak: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.pair is not None:
            a, b = self.pair
            return f"{self.reason} at vertex {self.vertex}: {tuple(a)} and {tuple(b)}"
        return f"{self.reason} at vertex {self.vertex}: weak palette {list(self.palette or ())}"


def check_total(g: Graph, c: IncidenceColoring, partial: bool = False) -> None:
    """Raise MalformedColoringError on foreign incidences, missing ones, or bad colors."""
    known = set(all_incidences(g))
    for inc, col in c.assignment.items():
        if inc not in known:
            raise MalformedColoringError(f"incidence {tuple(inc)} is not in the graph")
        if not isinstance(col, int) or not 1 <= col <= c.num_colors:
            raise MalformedColoringError(
                f"color {col!r} on {tuple(inc)} outside 1..{c.num_colors}")
    if not partial and len(c.assignment) != len(known):
        missing = sorted(known - set(c.assignment))
        raise MalformedColoringError(f"uncolored incidence {tuple(missing[0])}")


def verify(g: Graph, c: IncidenceColoring, ell: int | None = None,
           partial: bool = False) -> Verdict:
    """Check properness and, when a cap applies, the weak-palette bound.

    ``ell=None`` falls back to the coloring's declared ``weak_cap``; a cap of 0
    means unconstrained. With ``partial=True`` uncolored incidences are skipped,
    which is how the colorers check themselves between extension steps.
    The reported witness is the lexicographically first (vertex, edge) violation.
    """
    check_total(g, c, partial)
    if ell is None:
        ell = c.weak_cap
    a = c.assignment
    max_weak = 0
    for v in range(g.n):
        incs = []
        for w in g.neighbors(v):
            e = g.edge_index(v, w)
            incs.append((Incidence(e, v), True))
            incs.append((Incidence(e, w), False))
        incs.sort()
        colored = [(inc, strong, a[inc]) for inc, strong in incs if inc in a]
        for i, (x, xs, cx) in enumerate(colored):
            for y, ys, cy in colored[i + 1:]:
                if cx == cy and (xs or ys):
                    return Verdict(False, "conflict", v, (x, y))
        palette = sorted({col for _, strong, col in colored if not strong})
        max_weak = max(max_weak, len(palette))
        if ell and len(palette) > ell:
            return Verdict(False, "weak palette exceeds cap", v, palette=tuple(palette))
    return Verdict(True, max_weak=max_weak)


def verify_pairwise(g: Graph, c: IncidenceColoring) -> bool:
    """Reference check over all incidence pairs with :func:`adjacent` (O(m^2))."""
    incs = [i for i in all_incidences(g) if i in c.assignment]
    for i, a in enumerate(incs):
        for b in incs[i + 1:]:
            if c.assignment[a] == c.assignment[b] and adjacent(g, a, b):
                return False
    return True


def square_labeling(g: Graph, c: IncidenceColoring) -> dict[int, int]:
    """Vertex labels induced by a (k,1)-coloring: each vertex gets its single weak color."""
    out = {}
    for v in range(g.n):
        pal = c.weak_palette(g, v)
        if len(pal) > 1:
            raise ValueError(f"vertex {v} has {len(pal)} weak colors")
        if pal:
            out[v] = pal.pop()
    return out


# ---------------------------------------------------------------------------
# exchange format


def to_document(g: Graph, c: IncidenceColoring) -> dict:
    rows = []
    for inc in sorted(c.assignment):
        rows.append({"edge": list(g.edges[inc.edge]), "at": inc.at, "color": c.assignment[inc]})
    return {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "num_colors": c.num_colors,
        "weak_cap": c.weak_cap,
        "assignment": rows,
    }


def dumps(g: Graph, c: IncidenceColoring) -> str:
    return json.dumps(to_document(g, c), indent=1) + "\n"


def from_document(doc: Mapping | str) -> tuple[Graph, IncidenceColoring]:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedColoringError(f"not a JSON document: {exc}") from None
    try:
        g = Graph.from_edges(doc["edges"], n=int(doc["n"]))
        assignment = {}
        for row in doc["assignment"]:
            u, v = row["edge"]
            if not g.has_edge(u, v):
                raise MalformedColoringError(f"edge {[u, v]} not in graph")
            at = int(row["at"])
            if at not in (u, v):
                raise MalformedColoringError(f"'at' {at} is not an endpoint of {[u, v]}")
            inc = Incidence(g.edge_index(u, v), at)
            if inc in assignment:
                raise MalformedColoringError(f"incidence {[u, v]}@{at} colored twice")
            assignment[inc] = row["color"]
        c = IncidenceColoring(assignment, int(doc["num_colors"]), int(doc.get("weak_cap", 0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedColoringError(f"bad coloring document: {exc!r}") from None
    return g, c


def coloring_from_pairs(g: Graph, colors: Iterable[tuple[int, int, int]], num_colors: int,
                        weak_cap: int = 0) -> IncidenceColoring:
    """Build from ``(owner, far_end, color)`` triples; handy in tests."""
    return IncidenceColoring({Incidence(g.edge_index(u, v), u): col for u, v, col in colors},
                             num_colors, weak_cap)
