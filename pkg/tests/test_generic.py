import random
from fractions import Fraction

import pytest

from inccolor import generators as gen
from inccolor.errors import HypothesisViolation
from inccolor.generic import Budget, color_generic, find_reducible_vertex, required_delta
from inccolor.graph import Graph
from inccolor.incidence import dumps, verify


@pytest.mark.parametrize("k,alpha,expected", [(4, 0, 12), (4, 1, 6), (3, 0, 7)])
def test_required_delta(k, alpha, expected):
    assert required_delta(k, alpha) == expected


def test_budget_arithmetic():
    b = Budget(4, Fraction(0), 12)
    assert (b.t, b.num_colors, b.weak_cap) == (4, 15, 3)
    b = Budget(4, Fraction(1, 3), 10)
    assert b.t == 6 and b.weak_cap == 5


def test_find_reducible_vertex_examples():
    assert find_reducible_vertex(gen.star(13), Budget(4, Fraction(0), 13)) == 1
    assert find_reducible_vertex(gen.complete(7), Budget(4, Fraction(0), 6)) is None
    tri_pendant = Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3)])
    assert find_reducible_vertex(tri_pendant, Budget(3, Fraction(0), 3)) == 3


def test_star13():
    g = gen.star(13)
    c = color_generic(g, 4, 0)
    assert c.num_colors == 16 and c.weak_cap == 3
    assert verify(g, c, 3)


def test_hub_sparse_example():
    g = gen.generate("hub_sparse(40,12,4)", 0)
    c = color_generic(g, 4, 0)
    assert c.num_colors == g.max_degree + 3
    assert verify(g, c, 3)


def test_small_delta_uses_required_delta():
    g = gen.complete(4)
    c = color_generic(g, 4, 0)
    assert c.num_colors == 15
    assert verify(g, c, 3)


def test_edgeless():
    g = Graph.from_edges([], n=3)
    assert color_generic(g, 4, 0).assignment == {}


def test_hypothesis_violation_carries_witness():
    with pytest.raises(HypothesisViolation) as err:
        color_generic(gen.complete(5), 4, 0)
    assert sorted(err.value.witness) == [0, 1, 2, 3, 4]


def test_every_step_passes_partial_verification():
    rng = random.Random(8)
    for alpha, lo, hi in ((0, 12, 16), (1, 6, 11)):
        for _ in range(10):
            g = gen.hub_sparse(rng.randint(30, 45), rng.randint(lo, hi), 4, rng)
            c = color_generic(g, 4, alpha, verify_steps=True)
            assert verify(g, c)


def test_fractional_alpha():
    rng = random.Random(9)
    g = gen.hub_sparse(40, 9, 4, rng)
    c = color_generic(g, 4, Fraction(1, 2))
    b = Budget.for_graph(g, 4, Fraction(1, 2))
    assert (c.num_colors, c.weak_cap) == (b.num_colors, b.weak_cap)
    assert verify(g, c)


def test_trace_and_determinism():
    g = gen.generate("hub_sparse(30,12,4)", 5)
    t1, t2 = [], []
    a = color_generic(g, 4, 0, trace=t1)
    b = color_generic(g, 4, 0, trace=t2)
    assert t1 == t2 and t1
    assert dumps(g, a) == dumps(g, b)
    assert t1[0].startswith("u=")
