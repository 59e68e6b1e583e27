from __future__ import annotations

from itertools import combinations

import pytest
from conftest import graphs
from hypothesis import given, settings

from hamcond.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    petersen_graph,
    star,
    z_graph,
)
from hamcond.graph_core import GraphError
from hamcond.harness import enumerate_graphs
from hamcond.patterns import (
    THEOREMS,
    Pattern,
    check_hypothesis,
    enumerate_induced,
    fan_condition,
    heavy_class,
    is_heavy,
    recheck_witness,
    shi_condition,
)
from oracles import heavy_flags, hypothesis, induced_sets


def test_is_heavy_boundaries():
    assert all(is_heavy(complete_graph(4), v) for v in range(4))
    assert not any(is_heavy(cycle_graph(6), v) for v in range(6))
    assert not any(is_heavy(cycle_graph(5), v) for v in range(5))
    assert all(is_heavy(cycle_graph(4), v) for v in range(4))


def test_fan_condition_examples():
    assert all(fan_condition(complete_graph(4), u, v) for u, v in combinations(range(4), 2))
    p = petersen_graph()
    assert not any(fan_condition(p, u, v) for u, v in combinations(range(10), 2))
    assert fan_condition(star(4), 0, 1)


def test_shi_condition_examples():
    assert shi_condition(cycle_graph(4), 0, 2)
    p = petersen_graph()
    assert not any(shi_condition(p, u, v) for u, v in combinations(range(10), 2) if not p.has_edge(u, v))
    assert not shi_condition(cycle_graph(6), 0, 2)


def test_z2_roles_match_figure():
    copies = enumerate_induced(z_graph(2), Pattern.Z2)
    assert len(copies) == 1
    assert copies[0].as_dict() == {"a1": 0, "a2": 1, "a3": 2, "b1": 3, "c1": 4}


def test_pattern_examples():
    assert enumerate_induced(cycle_graph(6), Pattern.Z1) == []
    claws = enumerate_induced(petersen_graph(), Pattern.CLAW)
    assert len(claws) == 10
    assert sorted(c["center"] for c in claws) == list(range(10))


@pytest.mark.parametrize("pattern", list(Pattern))
@given(g=graphs(min_n=1, max_n=7))
@settings(max_examples=60)
def test_induced_copies_match_brute_force(pattern, g):
    copies = enumerate_induced(g, pattern)
    assert all(c.is_valid(g) for c in copies)
    sets = [frozenset(c.vertices) for c in copies]
    assert len(sets) == len(set(sets))
    assert set(sets) == induced_sets(g, pattern.value)


@given(g=graphs(min_n=4, max_n=7))
def test_canonical_role_order(g):
    for c in enumerate_induced(g, Pattern.CLAW):
        assert c["e1"] < c["e2"] < c["e3"]
    for p in (Pattern.Z1, Pattern.Z2):
        for c in enumerate_induced(g, p):
            assert c["a2"] < c["a3"]


def test_heavy_class_examples():
    assert all(vars(heavy_class(cycle_graph(5))).values())
    claw = heavy_class(star(3))
    assert not claw.o_heavy and not claw.one_heavy
    k33 = heavy_class(complete_bipartite(3, 3))
    assert k33.o_heavy and not k33.claw_free
    with pytest.raises(GraphError):
        heavy_class(complete_graph(2))


@given(g=graphs(min_n=3, max_n=7))
def test_heavy_class_matches_definitions(g):
    assert vars(heavy_class(g)) == heavy_flags(g)


def test_hypothesis_examples():
    assert check_hypothesis(complete_bipartite(3, 3), "T10").satisfied
    rep = check_hypothesis(petersen_graph(), "T11")
    assert not rep.satisfied and rep.witness.reason == "light_claw"
    claw = rep.witness.copy
    assert all(petersen_graph().deg[claw[e]] == 3 for e in ("e1", "e2", "e3"))
    assert check_hypothesis(cycle_graph(6), "T10").satisfied
    with pytest.raises(GraphError):
        check_hypothesis(complete_graph(2), "T10")
    with pytest.raises(GraphError):
        check_hypothesis(complete_graph(3), "T12")


@pytest.mark.parametrize("theorem", THEOREMS)
@given(g=graphs(min_n=3, max_n=7))
@settings(max_examples=40)
def test_hypothesis_matches_statement(theorem, g):
    rep = check_hypothesis(g, theorem)
    assert rep.satisfied == hypothesis(g, theorem)
    assert recheck_witness(g, rep)


@pytest.mark.parametrize("theorem", THEOREMS)
def test_hypothesis_matches_statement_on_all_five_vertex_graphs(theorem):
    for g in enumerate_graphs(5):
        assert check_hypothesis(g, theorem).satisfied == hypothesis(g, theorem), g
