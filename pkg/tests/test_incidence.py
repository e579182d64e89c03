import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inccolor import generators as gen
from inccolor.degenerate import color_degenerate
from inccolor.errors import MalformedColoringError
from inccolor.exact import MAX_INCIDENCES, feasible
from inccolor.graph import Graph
from inccolor.incidence import (Incidence, IncidenceColoring, adjacent, all_incidences,
                                coloring_from_pairs, dumps, forbidden_set, from_document,
                                incidences_of, square_labeling, verify, verify_pairwise)

from conftest import small_graphs


def test_incidences_of_counts():
    s = gen.star(3)
    strong, weak = incidences_of(s, 0)
    assert len(strong) == 3 and len(weak) == 3
    p = gen.path(3)
    strong, weak = incidences_of(p, 0)
    assert len(strong) == 1 and len(weak) == 1
    g = Graph.from_edges([(0, 1)], n=3)
    assert incidences_of(g, 2) == (set(), set())


def test_adjacency_conditions():
    p = gen.path(4)  # 0-1-2-3
    uv, vw, wx = p.edge_index(0, 1), p.edge_index(1, 2), p.edge_index(2, 3)
    assert adjacent(p, Incidence(uv, 0), Incidence(uv, 1))
    assert adjacent(p, Incidence(uv, 0), Incidence(vw, 1))
    assert not adjacent(p, Incidence(uv, 0), Incidence(wx, 3))


def test_forbidden_set_parts():
    p = gen.path(3)
    uv, vw = p.edge_index(0, 1), p.edge_index(1, 2)
    assert forbidden_set(p, {}, Incidence(uv, 0)).colors == frozenset()
    f = forbidden_set(p, {Incidence(vw, 1): 2}, Incidence(uv, 0))
    assert f.colors == {2} and f.strong_v == {2}
    k2 = gen.path(2)
    f = forbidden_set(k2, {Incidence(0, 1): 5}, Incidence(0, 0))
    assert f.colors == {5} and f.weak_u == {5}
    assert f.colors == f.weak_u | f.strong_u | f.strong_v


def test_verify_small_examples():
    k2 = gen.path(2)
    good = coloring_from_pairs(k2, [(0, 1, 1), (1, 0, 2)], 2)
    v = verify(k2, good)
    assert v and v.max_weak == 1
    bad = coloring_from_pairs(k2, [(0, 1, 1), (1, 0, 1)], 2)
    assert not verify(k2, bad)
    p = gen.path(3)
    c = coloring_from_pairs(p, [(0, 1, 3), (1, 0, 1), (1, 2, 2), (2, 1, 3)], 3)
    assert verify(p, c, 1)
    assert len(c.colors_used()) == 3


def test_verify_witness_is_concrete():
    p = gen.path(3)
    c = coloring_from_pairs(p, [(0, 1, 1), (1, 0, 2), (1, 2, 2), (2, 1, 3)], 3)
    v = verify(p, c)
    assert not v and v.vertex == 1 and v.pair is not None
    c = coloring_from_pairs(p, [(0, 1, 1), (1, 0, 3), (1, 2, 4), (2, 1, 2)], 4)
    v = verify(p, c, 1)
    assert not v and v.palette == (1, 2)
    assert "weak palette" in v.describe()


def test_verify_rejects_malformed():
    k2 = gen.path(2)
    with pytest.raises(MalformedColoringError):
        verify(k2, coloring_from_pairs(k2, [(0, 1, 1), (1, 0, 3)], 2))
    with pytest.raises(MalformedColoringError):
        verify(k2, coloring_from_pairs(k2, [(0, 1, 1)], 2))


def test_document_round_trip_is_byte_stable():
    g = gen.cycle(4)
    c = IncidenceColoring({inc: 1 + i for i, inc in enumerate(all_incidences(g))}, 8, 2)
    text = dumps(g, c)
    g2, c2 = from_document(text)
    assert g2.edges == g.edges and c2 == c
    assert dumps(g2, c2) == text
    assert list(json.loads(text)) == ["n", "edges", "num_colors", "weak_cap", "assignment"]


@pytest.mark.parametrize("doc", ["not json", '{"n": 2}',
                                 '{"n":2,"edges":[[0,1]],"num_colors":2,"assignment":'
                                 '[{"edge":[0,1],"at":5,"color":1}]}'])
def test_from_document_errors(doc):
    with pytest.raises(MalformedColoringError):
        from_document(doc)


def _random_coloring(g, rng, k):
    return IncidenceColoring({inc: rng.randint(1, k) for inc in all_incidences(g)}, k)


@settings(max_examples=200)
@given(small_graphs(max_n=5), st.integers(min_value=0, max_value=2**32 - 1),
       st.integers(min_value=2, max_value=5))
def test_verify_agrees_with_pairwise_adjacency(g, seed, k):
    c = _random_coloring(g, random.Random(seed), k)
    assert bool(verify(g, c)) == verify_pairwise(g, c)


def _all_proper(g, k):
    incs = all_incidences(g)
    for colors in itertools.product(range(1, k + 1), repeat=len(incs)):
        c = IncidenceColoring(dict(zip(incs, colors)), k)
        if verify(g, c):
            yield c


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=4), st.integers(min_value=0, max_value=3))
def test_raising_num_colors_keeps_acceptance(g, ell):
    if len(all_incidences(g)) > 8:
        return
    for c in itertools.islice(_all_proper(g, 4), 20):
        if verify(g, c, ell):
            assert verify(g, c.with_num_colors(c.num_colors + 3), ell)


def _assert_square(g, c):
    lab = square_labeling(g, c)
    for u in range(g.n):
        for w in g.neighbors(u):
            assert lab[u] != lab[w]
            for x in g.neighbors(w):
                if x != u:
                    assert lab[u] != lab[x]


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6))
def test_weak_cap_one_gives_square_coloring(g):
    if 2 * g.m > MAX_INCIDENCES:
        return
    res = feasible(g, 2 * g.max_degree + 2, 1)
    if res:
        assert verify(g, res.witness, 1)
        _assert_square(g, res.witness)


def test_tree_colorings_are_square_colorings():
    rng = random.Random(7)
    for _ in range(20):
        g = gen.random_degenerate(rng.randint(2, 25), 1, rng)
        c = color_degenerate(g, 1)
        assert verify(g, c, 1)
        _assert_square(g, c)
