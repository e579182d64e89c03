import pytest
from hypothesis import given

from inccolor.errors import GraphParseError
from inccolor.graph import (Graph, degeneracy_order, k_core, load_graph, parse_dimacs,
                            parse_edge_list)
from inccolor import generators as gen

from conftest import small_graphs


def test_edges_are_normalized_and_deduplicated():
    g = Graph.from_edges([(2, 1), (1, 2), (0, 1)])
    assert g.edges == ((1, 2), (0, 1))
    assert g.n == 3 and g.m == 2
    assert g.degree(1) == 2 and g.max_degree == 2
    assert g.edge_index(2, 1) == 0


def test_edge_list_parser_reports_line():
    with pytest.raises(GraphParseError) as err:
        parse_edge_list("0 1\n# comment\n\n1 one\n")
    assert err.value.line == 4


def test_edge_list_rejects_loops():
    with pytest.raises(GraphParseError):
        parse_edge_list("3 3\n")


def test_dimacs_is_one_based():
    g = parse_dimacs("c triangle\np edge 4 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert g.n == 4
    assert set(g.edges) == {(0, 1), (1, 2), (0, 2)}


@pytest.mark.parametrize("text", ["e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2\n", "x\n"])
def test_dimacs_errors(text):
    with pytest.raises(GraphParseError):
        parse_dimacs(text)


def test_load_graph_dispatches_on_suffix(tmp_path):
    (tmp_path / "a.col").write_text("p edge 2 1\ne 1 2\n")
    (tmp_path / "a.txt").write_text("0 1\n")
    assert load_graph(str(tmp_path / "a.col")).edges == load_graph(str(tmp_path / "a.txt")).edges


def test_degeneracy_of_known_graphs():
    assert degeneracy_order(gen.path(6)).degeneracy == 1
    assert degeneracy_order(gen.cycle(7)).degeneracy == 2
    assert degeneracy_order(gen.complete(5)).degeneracy == 4
    assert degeneracy_order(gen.grid(4, 4)).degeneracy == 2
    assert k_core(gen.complete(5), 4) == [0, 1, 2, 3, 4]
    assert k_core(gen.star(6), 2) == []


@given(small_graphs(max_n=8))
def test_smallest_last_back_degrees_bounded(g):
    order = degeneracy_order(g)
    assert sorted(order.order) == list(range(g.n))
    assert max(order.back_degrees(g), default=0) <= order.degeneracy


@given(small_graphs(max_n=7))
def test_edge_list_round_trip(g):
    h = parse_edge_list(g.to_edge_list())
    assert set(h.edges) == set(g.edges)


def test_parse_examples():
    g = parse_edge_list("0 1\n1 2")
    assert g.degrees() == [1, 2, 1]
    assert parse_edge_list("0 1\n0 1").m == 1
    with pytest.raises(GraphParseError):
        parse_edge_list("0 0")


def test_generator_shapes():
    g = gen.grid(3, 3)
    assert (g.n, g.m, g.max_degree) == (9, 12, 4)
    s = gen.star(7)
    assert (s.max_degree, s.m) == (7, 7)


def test_hub_sparse_example():
    from inccolor.mad import mad
    g = gen.generate("hub_sparse(40,12,4)", seed=0)
    assert g.max_degree == 12
    assert mad(g).value < 4


def test_generate_is_reproducible():
    for kind in ("hub_sparse(30,9,4)", "random_degenerate(20,3)", "grid_apex(4,5,1/5)",
                 "regular_hubs(24,3,1,8,4)"):
        assert gen.generate(kind, 3).edges == gen.generate(kind, 3).edges


def test_grid_apex_is_triangle_free():
    import networkx as nx
    g = gen.grid_apex(5, 6)
    h = nx.Graph(g.edges)
    assert sum(nx.triangles(h).values()) == 0
    assert nx.check_planarity(h)[0]


@pytest.mark.parametrize("kind", ["nope(1)", "grid(3)", "cycle(2)", "garbage"])
def test_generate_errors(kind):
    from inccolor.errors import GenerationError
    with pytest.raises(GenerationError):
        gen.generate(kind)
