"""Simple undirected graphs, text I/O and smallest-last degeneracy."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import GraphParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` keeps first-seen order with each pair normalized to ``(min, max)``;
    edge indices are positions in this tuple and are what incidences refer to.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> "Graph":
        seen: dict[Edge, int] = {}
        top = -1
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u < 0 or v < 0:
                raise ValueError(f"negative vertex id in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            top = max(top, e[1])
            if e not in seen:
                seen[e] = len(seen)
        if n is None:
            n = top + 1
        elif top >= n:
            raise ValueError(f"vertex {top} out of range for n={n}")
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, tuple(seen), adjacency, seen)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        s = set(vertices)
        return sum(1 for u, v in self.edges if u in s and v in s)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


# ---------------------------------------------------------------------------
# parsing


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse ``"u v"`` lines; ``#`` starts a comment, blank lines are skipped.

    Vertex count is one more than the largest id seen, so gaps become isolated
    vertices. Duplicate edges collapse; loops are rejected.
    """
    if not isinstance(text, str):
        text = text.read()
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two vertex ids, got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"malformed vertex id in {raw!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex id in {raw!r}", lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        edges.append((u, v))
    return Graph.from_edges(edges)


def parse_dimacs(text: str | TextIO) -> Graph:
    """Read the DIMACS ``.col`` dialect: ``p edge n m`` then 1-based ``e u v`` lines."""
    if not isinstance(text, str):
        text = text.read()
    n = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if len(parts) != 4 or n is not None:
                    raise GraphParseError(f"bad problem line {raw!r}", lineno)
                n = int(parts[2])
            elif tag == "e":
                if n is None:
                    raise GraphParseError("edge before problem line", lineno)
                if len(parts) != 3:
                    raise GraphParseError(f"bad edge line {raw!r}", lineno)
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphParseError(f"vertex out of range in {raw!r}", lineno)
                if u == v:
                    raise GraphParseError(f"loop at vertex {u + 1}", lineno)
                edges.append((u, v))
            else:
                raise GraphParseError(f"unknown line type {tag!r}", lineno)
        except ValueError:
            raise GraphParseError(f"malformed integer in {raw!r}", lineno) from None
    if n is None:
        raise GraphParseError("missing problem line")
    return Graph.from_edges(edges, n=n)


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".col"):
        return parse_dimacs(text)
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# degeneracy


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple[int, ...]
    degeneracy: int

    def back_degrees(self, g: Graph) -> list[int]:
        """Number of neighbors appearing later in ``order``, indexed by position."""
        pos = {v: i for i, v in enumerate(self.order)}
        return [sum(1 for w in g.neighbors(v) if pos[w] > i) for i, v in enumerate(self.order)]


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Smallest-last elimination; ties go to the smallest vertex id."""
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        k = max(k, d)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyOrder(tuple(order), k)


def k_core(g: Graph, k: int) -> list[int]:
    """Vertices of the k-core (maximal subgraph of minimum degree >= k)."""
    deg = g.degrees()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] < k]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k:
                    alive[w] = False
                    stack.append(w)
    return [v for v in range(g.n) if alive[v]]
