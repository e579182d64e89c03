import random

import pytest

from inccolor import generators as gen
from inccolor.degenerate import (DegenerateStats, build_peel_stack, color_degenerate,
                                 complete_palette)
from inccolor.errors import HypothesisViolation
from inccolor.graph import Graph
from inccolor.incidence import dumps, verify


def _check(g, k):
    c = color_degenerate(g, k)
    assert c.num_colors == max(g.max_degree + 2 * k - 1, 1)
    assert c.weak_cap == k
    assert verify(g, c, k)
    return c


def test_examples():
    rng = random.Random(3)
    tree = gen.random_degenerate(15, 1, rng)
    c = _check(tree, 1)
    assert c.num_colors == tree.max_degree + 1
    assert _check(gen.cycle(5), 2).num_colors == 5
    assert _check(gen.complete(4), 3).num_colors == 8


def test_edgeless_graph():
    g = Graph.from_edges([], n=4)
    c = color_degenerate(g, 1)
    assert c.assignment == {}


def test_degeneracy_violation_names_core():
    g = Graph.from_edges(list(gen.complete(4).edges) + [(3, 4), (4, 5)])
    with pytest.raises(HypothesisViolation) as err:
        color_degenerate(g, 2)
    assert sorted(err.value.witness) == [0, 1, 2, 3]


def test_peel_stack_back_degrees():
    rng = random.Random(4)
    g = gen.random_degenerate(30, 3, rng)
    stack = build_peel_stack(g, 3)
    assert all(len(nbrs) <= 3 for _, nbrs in stack.entries)
    assert sorted(v for v, _ in stack.entries) == list(range(g.n))


def test_complete_palette_avoids_strong_colors():
    assert complete_palette({4}, {1, 2}, 3, 9) == [4, 3, 5]
    assert complete_palette(set(), set(), 2, 9) == [1, 2]


def test_random_instances_without_backtracking():
    rng = random.Random(2024)
    stats = DegenerateStats()
    for _ in range(60):
        k = rng.randint(1, 4)
        g = gen.random_degenerate(rng.randint(2, 40), k, rng)
        c = color_degenerate(g, k, stats)
        assert verify(g, c, k)
    assert stats.backtracks == 0


def test_deterministic_output():
    g = gen.generate("random_degenerate(30,3)", 9)
    assert dumps(g, color_degenerate(g, 3)) == dumps(g, color_degenerate(g, 3))
