from __future__ import annotations

import threading
import pytest
from conftest import graphs
from hypothesis import given, settings

from hamcond.cli_io import parse_graph6
from hamcond.engine import (
    Extension,
    Lemma3Input,
    SearchCancelled,
    Stuck,
    circumference,
    extend_cycle,
    find_fan,
    find_hamiltonian,
    hamiltonian_cycle,
    is_heavy_cycle,
    lemma3_check,
    longest_cycle,
    longest_cycles,
    shortest_cycle,
)
from hamcond.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star,
    theta_line_family,
)
from hamcond.graph_core import Graph, GraphError, OrientedCycle, is_k_connected, is_valid_cycle
from hamcond.harness import orbit_table
from oracles import circumference as brute_circumference
from oracles import is_hamiltonian


def test_longest_cycle_examples():
    assert len(longest_cycle(cycle_graph(5))) == 5
    assert len(longest_cycle(petersen_graph())) == 9
    assert longest_cycle(star(4)) is None
    assert longest_cycle(path_graph(5)) is None


def test_longest_cycle_cap():
    with pytest.raises(GraphError):
        longest_cycle(cycle_graph(25))
    assert len(longest_cycle(cycle_graph(25), cap=25)) == 25


def test_search_can_be_cancelled():
    stop = threading.Event()
    stop.set()
    with pytest.raises(SearchCancelled):
        longest_cycle(petersen_graph(), stop=stop.is_set)


@given(graphs(min_n=3, max_n=7))
@settings(max_examples=80)
def test_circumference_matches_brute_force(g):
    c = longest_cycle(g)
    assert circumference(g) == brute_circumference(g)
    if c is not None:
        assert is_valid_cycle(g, c)
    assert (hamiltonian_cycle(g) is not None) == is_hamiltonian(g)


@given(graphs(min_n=3, max_n=6))
@settings(max_examples=60)
def test_longest_cycles_are_all_maximum(g):
    cs = longest_cycles(g)
    k = brute_circumference(g)
    assert all(len(c) == k and is_valid_cycle(g, c) for c in cs)
    assert len({frozenset(c.edges()) for c in cs}) == len(cs)


@given(graphs(min_n=3, max_n=8))
def test_shortest_cycle_is_girth(g):
    c = shortest_cycle(g)
    import networkx as nx

    from oracles import to_nx

    girth = nx.girth(to_nx(g))
    if c is None:
        assert girth == float("inf")
    else:
        assert is_valid_cycle(g, c) and len(c) == girth


def test_is_heavy_cycle_examples():
    c6 = cycle_graph(6)
    assert is_heavy_cycle(c6, OrientedCycle((0, 1, 2, 3, 4, 5)))
    assert not is_heavy_cycle(complete_graph(4), OrientedCycle((0, 1, 2)))
    assert is_heavy_cycle(complete_bipartite(3, 3), OrientedCycle((0, 3, 1, 4, 2, 5)))
    # no heavy vertex at all: every cycle qualifies
    assert is_heavy_cycle(petersen_graph(), OrientedCycle((0, 1, 2, 3, 4)))


def _c4_plus_hat() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])


def test_fan_examples():
    g = _c4_plus_hat()
    c = OrientedCycle((0, 1, 2, 3))
    fan = find_fan(g, c, 4, 2)
    assert fan.paths == ((4, 0), (4, 2)) and fan.is_valid(g, c)
    assert find_fan(g, c, 4, 3) is None
    with pytest.raises(GraphError):
        find_fan(g, c, 0, 2)


def test_three_connected_graphs_have_three_fans():
    checked = 0
    for n in range(5, 8):
        for g, _ in orbit_table(n).representatives():
            if not is_k_connected(g, 3):
                continue
            c = shortest_cycle(g)
            for u in range(g.n):
                if u not in c:
                    fan = find_fan(g, c, u, 3)
                    assert fan is not None and fan.is_valid(g, c)
                    checked += 1
    assert checked > 500


def test_fan_uses_fewest_vertices():
    # two routes from 5 to vertex 2: direct, or through 6 and 7
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2), (5, 6), (6, 7), (7, 3)])
    c = OrientedCycle((0, 1, 2, 3, 4))
    fan = find_fan(g, c, 5, 2)
    assert fan.size == 3


def test_structure_k23_clause_a():
    # sides {a=0, b=1}, {x=2, y=3, z=4}; C = a x b y, R = {z}
    g = complete_bipartite(2, 3)
    c = OrientedCycle((0, 2, 1, 3))
    rep = lemma3_check(Lemma3Input(g, c, 1 << 4))
    assert rep.ok and {"a", "b", "c"} <= rep.checked
    assert "d" not in rep.checked  # K_{2,3} is not o-heavy
    assert g.deg[4] + g.deg[2] < g.n


def test_structure_rejects_malformed_input():
    g = complete_bipartite(2, 3)
    c = OrientedCycle((0, 2, 1, 3))
    with pytest.raises(GraphError):
        lemma3_check(Lemma3Input(g, c, 1 << 2))
    with pytest.raises(GraphError):
        lemma3_check(Lemma3Input(g, OrientedCycle((0, 1, 2)), 1 << 4))


def test_structure_guarded_clauses_on_line_graphs():
    from hamcond.harness import verify_lemmas

    rep = verify_lemmas(theta_line_family(), implications=False)
    assert rep.structure_guarded == rep.structure_instances > 0
    assert rep.clause_checks["f"] == rep.structure_instances
    assert rep.clean


def test_structure_detects_a_short_cycle():
    # a triangle inside K5 is not longest: clause (a) must fail somewhere
    g = complete_graph(5)
    rep = lemma3_check(Lemma3Input(g, OrientedCycle((0, 1, 2)), (1 << 3) | (1 << 4)))
    assert not rep.ok


def test_extend_cycle_examples():
    g = complete_graph(5)
    ext = extend_cycle(g, OrientedCycle((0, 1, 2, 3)))
    assert isinstance(ext, Extension) and ext.strategy == "s0" and len(ext.cycle) == 5
    with pytest.raises(GraphError):
        extend_cycle(cycle_graph(6), OrientedCycle((0, 1, 2, 3, 4, 5)))
    with pytest.raises(GraphError):
        extend_cycle(g, OrientedCycle((0, 1, 2, 3)), strategies=("s9",))


def test_extend_cycle_via_z2_argument():
    g = parse_graph6("Dlo")
    c = OrientedCycle((0, 4, 1))
    assert extend_cycle(g, c, strategies=("s0",)) == Stuck(("s0",))
    ext = extend_cycle(g, c)
    assert ext.strategy == "s1" and len(ext.cycle) == 5 and is_valid_cycle(g, ext.cycle)


def test_extend_cycle_via_fan_argument():
    g = parse_graph6("Efr_")
    c = OrientedCycle((0, 3, 1, 4))
    assert isinstance(extend_cycle(g, c, strategies=("s0", "s1")), Stuck)
    ext = extend_cycle(g, c)
    assert ext.strategy == "s2" and len(ext.cycle) == 6 and is_valid_cycle(g, ext.cycle)


def test_extend_stuck_on_longest_cycle():
    p = petersen_graph()
    assert isinstance(extend_cycle(p, longest_cycle(p)), Stuck)


def test_find_hamiltonian_examples():
    cert = find_hamiltonian(complete_bipartite(3, 3), "T10")
    assert cert.outcome == "hamilton_cycle" and len(cert.cycle) == 6
    cert = find_hamiltonian(petersen_graph(), "T11")
    assert cert.outcome == "hypothesis_violation" and cert.report.witness.reason == "light_claw"
    cert = find_hamiltonian(cycle_graph(6), "T10")
    assert {tuple(sorted(e)) for e in cert.cycle.edges()} == set(cycle_graph(6).edges())
    with pytest.raises(GraphError):
        find_hamiltonian(complete_graph(2), "T10")


def test_find_hamiltonian_without_hypothesis():
    assert find_hamiltonian(petersen_graph(), None).outcome == "not_hamiltonian"
    assert find_hamiltonian(petersen_graph(), None, mode="exact").outcome == "not_hamiltonian"
    assert find_hamiltonian(star(3), None).outcome == "not_hamiltonian"


@given(graphs(min_n=3, max_n=7))
@settings(max_examples=100)
def test_proof_driven_and_exact_agree(g):
    a = find_hamiltonian(g, None)
    b = find_hamiltonian(g, None, mode="exact")
    assert a.is_hamiltonian == b.is_hamiltonian == is_hamiltonian(g)
    for cert in (a, b):
        if cert.is_hamiltonian:
            assert is_valid_cycle(g, cert.cycle) and len(cert.cycle) == g.n


def test_line_graphs_are_not_hamiltonian_but_claw_free():
    from hamcond.patterns import heavy_class

    for g in theta_line_family():
        assert heavy_class(g).claw_free and is_k_connected(g, 2)
        assert hamiltonian_cycle(g) is None
