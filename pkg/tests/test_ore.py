from __future__ import annotations

from itertools import combinations

import pytest
from conftest import graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from hamcond.generators import complete_bipartite, cycle_graph, k4_minus_edge
from hamcond.graph_core import GraphError, OrientedCycle, is_valid_cycle
from hamcond.ore import RealizationError, is_o_cycle, iter_o_cycles, ore_edges, realize_cycle
from oracles import cycles_on


def test_ore_edges_examples():
    e = ore_edges(k4_minus_edge())
    assert e.tag(0, 3) == "pseudo" and e.tag(0, 1) == "real"
    assert not ore_edges(cycle_graph(6)).pseudo
    k33 = ore_edges(complete_bipartite(3, 3))
    same_side = {p for side in ((0, 1, 2), (3, 4, 5)) for p in combinations(side, 2)}
    assert set(k33.pseudo) == same_side


@given(graphs(min_n=3, max_n=8))
def test_ore_edge_invariants(g):
    e = ore_edges(g)
    assert set(g.edges()) == set(e.real)
    for u, v in e.pseudo:
        assert not g.has_edge(u, v) and g.deg[u] + g.deg[v] >= g.n
    missing = {(u, v) for u, v in combinations(range(g.n), 2)} - set(e.real) - set(e.pseudo)
    assert all(g.deg[u] + g.deg[v] < g.n for u, v in missing)


def test_is_o_cycle_examples():
    assert is_o_cycle(cycle_graph(5), (0, 1, 2, 3, 4))
    assert is_o_cycle(k4_minus_edge(), (0, 1, 2, 3))
    assert not is_o_cycle(cycle_graph(6), (0, 2, 4))


def test_realize_real_cycle_is_identity():
    g = cycle_graph(5)
    assert realize_cycle(g, (0, 1, 2, 3, 4)) == OrientedCycle((0, 1, 2, 3, 4))


def test_realize_k4_minus_edge():
    g = k4_minus_edge()
    c = realize_cycle(g, (0, 1, 2, 3))
    assert is_valid_cycle(g, c) and set(c.seq) == {0, 1, 2, 3}
    assert c == OrientedCycle((0, 1, 3, 2))


def test_realization_can_need_an_outside_vertex():
    # in C4 the pseudo edge 0-2 closes the o-cycle (0,1,2); no triangle exists on {0,1,2}
    g = cycle_graph(4)
    assert is_o_cycle(g, (0, 1, 2)) and not cycles_on(g, (0, 1, 2))
    c = realize_cycle(g, (0, 1, 2))
    assert set(c.seq) == {0, 1, 2, 3}
    assert set(realize_cycle(g, (0, 1, 2), method="exhaustive").seq) == {0, 1, 2, 3}


def test_realize_rejects_non_o_cycles():
    with pytest.raises(GraphError):
        realize_cycle(cycle_graph(6), (0, 2, 4))
    with pytest.raises(GraphError):
        realize_cycle(cycle_graph(4), (0, 1, 2), method="magic")


def test_realization_error_is_not_a_graph_error():
    assert not issubclass(RealizationError, GraphError)


@given(graphs(min_n=3, max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=80)
def test_realization_covers_o_cycle(g, rnd):
    ocs = list(iter_o_cycles(g))
    for oc in rnd.sample(ocs, min(len(ocs), 15)):
        if rnd.random() < 0.5:
            oc = oc[::-1]
        for method in ("exchange", "exhaustive"):
            c = realize_cycle(g, oc, method=method)
            assert is_valid_cycle(g, c)
            assert set(oc) <= set(c.seq)
            assert len(c) >= len(oc)
