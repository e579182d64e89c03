import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inccolor import generators as gen
from inccolor.catalog import (PROFILES, CatalogStats, Reduction, apply_discharge,
                              assert_reducible, color_catalog, find_configuration, get_profile,
                              profile_from_document, profile_to_document, recheck, repair_extend)
from inccolor.catalog.configurations import Match
from inccolor.catalog.profiles import DegreeBound
from inccolor.errors import HypothesisViolation, PeelStalled
from inccolor.graph import Graph
from inccolor.incidence import Incidence, verify
from inccolor.mad import satisfies_mad_bound
from inccolor.search import ColoringState

from conftest import random_graph, small_graphs

DATA = Path(__file__).parent / "data"
IDS = sorted(PROFILES)


# -- profile data --------------------------------------------------------------

@pytest.mark.parametrize("text,kind,value,rel", [
    ("3", "exact", 3, False), ("4-", "at_most", 4, False), ("7+", "at_least", 7, False),
    ("D-", "at_most", 0, True), ("D-2-", "at_most", 2, True)])
def test_degree_bound_parse(text, kind, value, rel):
    b = DegreeBound.parse(text)
    assert (b.kind, b.value, b.relative) == (kind, value, rel)
    assert b.text() == text


def test_profile_table():
    table = {p: (PROFILES[p].mad_bound, PROFILES[p].k_floor, PROFILES[p].extra_colors)
             for p in IDS}
    assert table == {"T1": (4, 7, 3), "T2": (Fraction(9, 2), 9, 4), "T3": (5, 9, 5),
                     "T4": (5, 7, 6), "T5": (6, 12, 6), "T6": (6, 8, 7)}


@pytest.mark.parametrize("pid", IDS)
def test_profile_json_round_trip(pid, tmp_path):
    p = PROFILES[pid]
    doc = profile_to_document(p)
    assert profile_from_document(json.loads(json.dumps(doc))) == p
    path = tmp_path / f"{pid}.json"
    path.write_text(json.dumps(doc))
    assert get_profile(str(path)) == p


def test_windows():
    assert PROFILES["T1"].in_window(7) and not PROFILES["T1"].in_window(6)
    assert PROFILES["T3"].in_window(5) and not PROFILES["T3"].in_window(7)
    assert PROFILES["T4"].in_window(8) and not PROFILES["T4"].in_window(9)


# -- configurations -----------------------------------------------------------

def test_configuration_examples():
    t1 = PROFILES["T1"]
    m = find_configuration(gen.grid(3, 3), t1)
    assert m.pattern.name == "2-vertex" and m.center == 0
    assert find_configuration(gen.complete(8), t1) is None
    for pid in IDS:
        assert find_configuration(gen.path(2), PROFILES[pid]).pattern.name == "1-vertex"


def test_edge_reduction_binds_the_right_neighbor():
    # 3-vertex 0 with neighbors of degree 5, 6, 7 and Delta = 7
    edges = [(0, 1), (0, 2), (0, 3)]
    nxt = 4
    for u, d in ((1, 5), (2, 6), (3, 7)):
        for _ in range(d - 1):
            edges.append((u, nxt))
            nxt += 1
    g = Graph.from_edges(edges)
    m = find_configuration(g, PROFILES["T1"])
    assert m.pattern.name == "1-vertex"
    from inccolor.catalog.configurations import match_at
    pat = PROFILES["T1"].catalog[3]
    bound = match_at(g.adjacency, pat, 0, 7)
    assert bound == (1, 2, 3)
    assert Match(pat, 0, bound, 7).removal == ("edge", (0, 1))


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9, min_edges=1), st.sampled_from(IDS))
def test_recheck_accepts_every_reported_match(g, pid):
    m = find_configuration(g, PROFILES[pid])
    if m is not None:
        assert recheck(g, m)


def test_recheck_rejects_tampered_match():
    g = gen.grid(3, 3)
    m = find_configuration(g, PROFILES["T1"])
    bad = Match(m.pattern, 4, m.bound_to, m.delta)
    assert not recheck(g, bad)


# -- discharging --------------------------------------------------------------

def test_discharge_examples():
    # no 3- or 4-vertices adjacent to givers, so nothing moves
    rep = apply_discharge(gen.complete(5), PROFILES["T1"])
    assert rep.final == (0,) * 5 and rep.final_sum == 0
    rep = apply_discharge(gen.complete(6), PROFILES["T1"])
    assert rep.final == (1,) * 6 and rep.final_sum == 6
    rep = apply_discharge(gen.star(5), PROFILES["T2"])
    assert rep.final[0] == 0
    assert all(w == Fraction(-17, 5) for w in rep.final[1:])
    rep = apply_discharge(gen.cycle(5), PROFILES["T3"])
    assert rep.final == rep.initial and rep.final_sum == -15


def test_uniform_rule_splits_positive_weight_only():
    # 4-vertex 0 with three 3-neighbors: T1 weight 0, so R3 gives nothing
    g = Graph.from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 5), (2, 6),
                          (3, 5), (3, 6)])
    rep = apply_discharge(g, PROFILES["T1"])
    assert rep.final_sum == rep.initial_sum


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=10), st.sampled_from(IDS))
def test_discharge_conserves_weight(g, pid):
    p = PROFILES[pid]
    rep = apply_discharge(g, p)
    assert rep.final_sum == rep.initial_sum == sum(Fraction(d) - p.discharge.target
                                                   for d in g.degrees())


# -- reducibility -------------------------------------------------------------

@pytest.mark.parametrize("pid", IDS)
def test_trees_and_grids_are_reducible(pid):
    rng = random.Random(1)
    p = PROFILES[pid]
    for _ in range(10):
        assert assert_reducible(gen.random_degenerate(rng.randint(2, 30), 1, rng), p)
    assert assert_reducible(gen.grid(4, 5), p)
    assert assert_reducible(Graph.from_edges([], n=3), p)


def test_assert_reducible_checks_hypothesis():
    with pytest.raises(HypothesisViolation):
        assert_reducible(gen.complete(5), PROFILES["T1"])


def test_failure_serializes_graph():
    v = assert_reducible(gen.complete(8), PROFILES["T1"], check_mad=False)
    assert not v and v.artifact["edges"] and v.artifact["profile"] == "T1"


# -- colorer ------------------------------------------------------------------

def test_colorer_examples():
    t1 = PROFILES["T1"]
    g = gen.grid(3, 3)
    c = color_catalog(g, t1)
    assert (c.num_colors, c.weak_cap) == (10, 3)
    assert verify(g, c, 3)
    h = gen.hub_sparse(50, 9, 4, random.Random(0))
    c = color_catalog(h, t1)
    assert (c.num_colors, c.weak_cap) == (12, 3)
    assert verify(h, c, 3)
    k2 = gen.path(2)
    for pid in IDS:
        c = color_catalog(k2, PROFILES[pid])
        assert len(c.colors_used()) == 2 and verify(k2, c)


def test_peel_stall_is_reported_with_artifact():
    with pytest.raises(PeelStalled) as err:
        color_catalog(gen.complete(8), PROFILES["T1"], check_mad=False)
    assert err.value.artifact["profile"] == "T1"


def test_one_vertex_reinsertion_is_tier_one():
    rng = random.Random(6)
    stats = CatalogStats()
    for _ in range(10):
        g = gen.random_degenerate(rng.randint(5, 25), 1, rng)
        color_catalog(g, PROFILES["T1"], stats)
    assert set(stats.tiers) == {1}


def test_isolated_edge_reinsertion():
    g = Graph.from_edges([(0, 1)], n=3)
    state = ColoringState(g, 10, 3, active_edges=())
    state.activate(0)
    assert repair_extend(state, Reduction("vertex", (0,), (0,), "1-vertex")) == 1
    assert verify(g, state.snapshot(), 3)


def test_tier_two_regression():
    doc = json.loads((DATA / "tier2_t1.json").read_text())
    g = Graph.from_edges(doc["edges"])
    e = g.edge_index(*doc["removed"])
    state = ColoringState(g, doc["num_colors"], doc["weak_cap"],
                          active_edges=[i for i in range(g.m) if i != e])
    for (u, v), at, c in doc["partial"]:
        state.assign(Incidence(g.edge_index(u, v), at), c)
    state.activate(e)
    variables = [Incidence(e, x) for x in g.edges[e]]
    found, _ = state.extend(variables)
    assert not found  # plain extension is impossible here
    red = Reduction("edge", tuple(doc["removed"]), (e,), "((D-2)-,(D-1)-,D-)-vertex")
    assert repair_extend(state, red) == 2
    assert verify(g, state.snapshot(), doc["weak_cap"])
    before = {Incidence(g.edge_index(u, v), at): c for (u, v), at, c in doc["partial"]}
    changed = [i for i, c in before.items() if state.color[i] != c]
    assert len(changed) == 1
    v = doc["removed"][0]
    assert changed[0].at != v and v in g.edges[changed[0].edge]


@pytest.mark.parametrize("pid", IDS)
def test_random_sparse_graphs_color_within_budget(pid):
    p = PROFILES[pid]
    rng = random.Random(hash(pid) & 0xFFFF)
    done = 0
    while done < 8:
        g = random_graph(rng, rng.randint(6, 18), rng.uniform(0.1, 0.4))
        if g.m == 0 or not satisfies_mad_bound(g, p.mad_bound):
            continue
        c = color_catalog(g, p)
        assert (c.num_colors, c.weak_cap) == p.budget(g.max_degree)
        assert verify(g, c, p.extra_colors)
        done += 1
