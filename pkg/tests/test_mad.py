import random
from fractions import Fraction

import networkx as nx
from hypothesis import given, settings

from inccolor import generators as gen
from inccolor.graph import Graph
from inccolor.mad import density, mad, mad_oracle, satisfies_mad_bound

from conftest import random_graph, small_graphs


def test_known_values():
    assert mad(gen.cycle(7)).value == 2
    k4p = Graph.from_edges(list(gen.complete(4).edges) + [(3, 4)])
    assert mad(k4p).value == 3
    petersen = Graph.from_edges(nx.petersen_graph().edges())
    assert mad(petersen).value == 3
    assert mad(gen.grid(3, 3)).value == Fraction(8, 3)
    assert mad(gen.path(2)).value == 1
    assert mad(gen.complete(3)).value == 2
    assert mad(gen.complete(4)).value == 3
    assert mad(Graph.from_edges([], n=3)).value == 0


def test_witness_attains_value():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 12), rng.random())
        res = mad(g)
        assert density(g, res.witness) == res.value


def test_bound_checks():
    assert satisfies_mad_bound(gen.cycle(5), 4)
    chk = satisfies_mad_bound(gen.complete(4), 3)
    assert not chk and set(chk.witness) == {0, 1, 2, 3}
    assert satisfies_mad_bound(gen.grid(3, 3), 4)
    assert not satisfies_mad_bound(gen.cycle(5), 2)
    assert satisfies_mad_bound(gen.cycle(5), Fraction(21, 10))


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=8))
def test_agrees_with_oracle(g):
    assert mad(g).value == mad_oracle(g)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=8, min_edges=1))
def test_removing_an_edge_never_increases_mad(g):
    h = Graph.from_edges(g.edges[1:], n=g.n)
    assert mad(h).value <= mad(g).value


def test_regular_graphs_have_mad_equal_to_degree():
    for r, n in ((3, 10), (4, 9), (5, 12)):
        g = Graph.from_edges(nx.random_regular_graph(r, n, seed=1).edges(), n=n)
        assert mad(g).value == r


def test_bound_check_agrees_with_exact_value():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10), rng.random())
        v = mad(g).value
        for b in (v, v + Fraction(1, 100), v - Fraction(1, 100)):
            assert bool(satisfies_mad_bound(g, b)) == (v < b)
