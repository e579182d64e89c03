import random

import pytest
from hypothesis import strategies as st

from inccolor.graph import Graph


@st.composite
def small_graphs(draw, max_n=6, min_edges=0):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges,
                           max_size=len(pairs)))
    return Graph.from_edges(chosen, n=n)


def random_graph(rng: random.Random, n: int, p: float, connected: bool = False) -> Graph:
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(sorted(edges), n=n)


@pytest.fixture
def rng():
    return random.Random(12345)
