from __future__ import annotations

import pytest
from conftest import DATA, graphs
from hypothesis import given

from hamcond.cli import cli_dispatch
from hamcond.cli_io import (
    ParseError,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    read_graph,
)
from hamcond.generators import complete_bipartite, complete_graph, cycle_graph, petersen_graph
from hamcond.graph_core import is_valid_cycle
from hamcond.harness import enumerate_graphs
from oracles import graph6_reference


def test_graph6_matches_reference_encoder_up_to_five_vertices():
    for n in range(0, 6):
        for g in enumerate_graphs(n):
            code = encode_graph6(g)
            assert code == graph6_reference(n, frozenset(g.edges()))
            assert parse_graph6(code) == g


def test_graph6_known_records():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(petersen_graph()) == "IheA@GUAo"
    assert parse_graph6(encode_graph6(complete_graph(3))) == complete_graph(3)


@given(graphs(min_n=0, max_n=70))
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_graph6_long_form():
    g = cycle_graph(100)
    code = encode_graph6(g)
    assert code[0] == "~" and parse_graph6(code) == g


@pytest.mark.parametrize(
    "line, offset",
    [("D?", 2), ("D?{{", 3), ("", 0), ("D? {", 2), ("Bx", 1), ("~~", 1)],
)
def test_graph6_errors_carry_offsets(line, offset):
    with pytest.raises(ParseError) as err:
        parse_graph6(line)
    assert err.value.where == offset
    if line.strip():
        assert "byte" in str(err.value)


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_edge_list_examples():
    assert parse_edge_list("3 3\n0 1\n1 2\n2 0") == complete_graph(3)
    with pytest.raises(ParseError, match="line 3: duplicate"):
        parse_edge_list("3 2\n0 1\n0 1")
    with pytest.raises(ParseError, match="line 2: vertex id out of range"):
        parse_edge_list("2 1\n0 5")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3 2\n0 1\n", "announces 2 edges"),
        ("", "missing"),
        ("3 1\n0 x\n", "expected integers"),
        ("3 1\n1 1\n", "self-loop"),
        ("3 1 1\n", "expected two"),
    ],
)
def test_edge_list_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_edge_list(text)


def test_edge_list_comments_and_round_trip():
    text = "# a path\n3 2\n0 1  # first\n\n1 2\n"
    g = parse_edge_list(text)
    assert g.m == 2 and parse_edge_list(format_edge_list(g)) == g


def run(capsys, *argv):
    code = cli_dispatch(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_ham_exact(capsys):
    code, out, _ = run(capsys, "ham", str(DATA / "k33.g6"), "--theorem", "T10", "--mode", "exact")
    assert code == 0
    cycle = [int(x) for x in out.split()]
    assert sorted(cycle) == list(range(6))
    assert is_valid_cycle(complete_bipartite(3, 3), cycle)


def test_cli_ham_proof_driven(capsys):
    code, out, _ = run(capsys, "ham", str(DATA / "c6.el"), "--theorem", "T10")
    assert code == 0
    assert is_valid_cycle(cycle_graph(6), [int(x) for x in out.split()])


def test_cli_check_petersen(capsys):
    code, out, _ = run(capsys, "check", str(DATA / "petersen.el"), "--theorem", "T11")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "T11: violated"
    assert lines[1].startswith("witness: light_claw claw: center=")


def test_cli_check_satisfied(capsys):
    code, out, _ = run(capsys, "check", str(DATA / "k33.g6"), "--theorem", "t10")
    assert code == 0 and out == "T10: satisfied\n"


def test_cli_ham_reports_violation(capsys):
    code, out, _ = run(capsys, "ham", str(DATA / "petersen.el"), "--theorem", "T11")
    assert code == 1 and out.startswith("T11: violated")


def test_cli_search_exhaustive(capsys):
    code, out, _ = run(capsys, "search", "--n", "6", "--exhaustive", "--theorem", "T10")
    assert code == 0
    assert "counterexamples: 0" in out.splitlines()
    assert "graphs: 32768" in out.splitlines()


def test_cli_search_random_with_outputs(capsys, tmp_path):
    table, plot = tmp_path / "t.tsv", tmp_path / "p.png"
    argv = ["search", "--n", "6-9", "--random", "30", "--p", "0.4,0.7", "--seed", "3", "--theorem", "T11"]
    code, out, _ = run(capsys, *argv, "--table", str(table), "--plot", str(plot))
    assert code == 0
    again = run(capsys, *argv)[1]
    assert out == again
    rows = table.read_text().splitlines()
    assert rows[0].split("\t") == ["theorem", "n", "graphs", "hypothesis", "hamiltonian", "counterexamples"]
    assert sum(int(r.split("\t")[2]) for r in rows[1:]) == 30
    assert plot.read_bytes()[:4] == b"\x89PNG"


def test_cli_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", str(DATA / "petersen.el"), "--pattern", "claw")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10 and lines[0] == "center=0 e1=1 e2=4 e3=5"


def test_cli_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--n", "3-5", "--line-graphs")
    assert code == 0
    assert "structure violations: 0" in out and "clause f: 0" not in out


def test_cli_sharpness(capsys):
    code, out, _ = run(capsys, "sharpness", "--n", "6")
    assert code == 0 and out.splitlines()[-1] == "candidates: 2"


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["check", "x.el"],
        ["ham", "x.g6", "--theorem", "T3"],
        ["search", "--n", "5", "--theorem", "T10", "--bogus"],
        ["search", "--n", "7-5", "--theorem", "T10"],
        ["search", "--n", "5", "--theorem", "T10", "--random", "3", "--p", "2"],
    ],
)
def test_cli_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cli_parse_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("2 1\n0 5\n")
    code, _, err = run(capsys, "check", str(bad), "--theorem", "T10")
    assert code == 2 and "line 2" in err
    missing = tmp_path / "nope.g6"
    assert run(capsys, "check", str(missing), "--theorem", "T10")[0] == 2


def test_read_graph_wants_one_graph(tmp_path):
    two = tmp_path / "two.g6"
    two.write_text("Bw\nBw\n")
    with pytest.raises(ParseError):
        read_graph(two)
