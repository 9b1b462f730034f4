# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import io
import json

import pytest

import vtlink.cli
from vtlink._utils import InvariantViolation
from vtlink.cayley import default_catalog, neighbourhood_census, save_census
from vtlink.cli import EXIT_ELIMINATED, EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, analyze, main
from vtlink.graphs import emit_graph6, make_named_graph

from .utils import k5_minus_edge


@pytest.fixture
def stdin(monkeypatch):
    def set_stdin(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    return set_stdin


def graph6_lines(*graphs):
    return "".join(emit_graph6(graph).decode("ascii") + "\n" for graph in graphs)


def test_analyze(sd16_neighbourhood_graph):
    analysis = analyze(sd16_neighbourhood_graph)
    assert analysis["n"] == 6
    assert analysis["m"] == 6
    assert analysis["asymmetric"]
    assert analysis["classes"] == [["A"], ["B", "C"], ["D", "F"], ["E"]]
    assert analysis["orbit_restrictors"] == [["A"], ["E"], ["A", "B", "C"]]
    assert analysis["fixed_subsets"] == {"A": ["B", "C"], "B": [], "D": [], "E": ["C", "F"]}


def test_analyze_command_reads_bundled_datasets(capsys):
    assert main(["analyze", "sd16_neighbourhood.edges", "--json"]) == EXIT_OK
    analysis = json.loads(capsys.readouterr().out)
    assert analysis["classes"][0] == ["A"]

    assert main(["analyze", "sd16_neighbourhood.edges"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "asymmetric: yes" in out
    assert "F(X, E) = {C, F}" in out


def test_eliminate_from_stdin(stdin, capsys):
    stdin(graph6_lines(k5_minus_edge()))
    assert main(["eliminate"]) == EXIT_OK
    assert "overall: eliminated (vertex-transitive scope, R1-edge-bound)" in capsys.readouterr().out

    stdin(graph6_lines(k5_minus_edge()))
    assert main(["eliminate", "--fail-on-eliminated"]) == EXIT_ELIMINATED

    stdin(graph6_lines(make_named_graph("cycle", 5)))
    assert main(["eliminate", "--fail-on-eliminated"]) == EXIT_OK
    assert "overall: inconclusive" in capsys.readouterr().out


def test_eliminate_edge_list(stdin, capsys):
    stdin("a b\nb c\nc d\nd a\n")
    assert main(["eliminate", "--format", "edges", "--json", "--all-rules"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 4
    assert len(report["rules"]) == 7
    assert report["overall"]["outcome"] == "inconclusive"


@pytest.mark.parametrize("jobs", [1, 2])
def test_eliminate_batch_keeps_input_order(stdin, capsys, jobs):
    stdin(graph6_lines(make_named_graph("cycle", 5), k5_minus_edge(), make_named_graph("star", 4)))
    assert main(["eliminate", "--json", "--jobs", str(jobs)]) == EXIT_OK
    reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [report["n"] for report in reports] == [5, 5, 4]
    assert [report["overall"]["rule"] for report in reports] == [None, "R1-edge-bound", "R2-complete-valency"]


def test_eliminate_scope_option(stdin, capsys):
    spider = "c x1\nx1 y1\nc x2\nx2 y2\nc x3\nx3 y3\n"
    stdin(spider)
    assert main(["eliminate", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["overall"]["scope"] == "cayley-only"

    stdin(spider)
    assert main(["eliminate", "--json", "--scope", "vertex-transitive"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["overall"]["outcome"] == "inconclusive"


def test_usage_errors(stdin, capsys, tmp_path):
    stdin("B!\n")
    assert main(["eliminate", "--format", "graph6"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("vtlink:")

    assert main(["analyze", str(tmp_path / "missing.g6")]) == EXIT_USAGE

    stdin("a b\n")
    assert main(["eliminate", "--max-clique-order", "0"]) == EXIT_USAGE

    with pytest.raises(SystemExit):
        main(["eliminate", "--scope", "cayley"])
    with pytest.raises(SystemExit):
        main([])


def test_internal_check_failure(monkeypatch, stdin, capsys):
    def failing_run_all(graph, **kwargs):
        raise InvariantViolation("forced")

    monkeypatch.setattr(vtlink.cli, "run_all", failing_run_all)
    stdin(graph6_lines(k5_minus_edge()))
    assert main(["eliminate"]) == EXIT_INVARIANT
    assert "internal check failed: forced" in capsys.readouterr().err


def test_demo(capsys):
    assert main(["demo"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "group: SD16 (order 16)" in out
    assert "asymmetric: yes" in out
    assert "overall: eliminated" not in out


def test_census_from_file(tmp_path, capsys):
    path = tmp_path / "census.g6"
    save_census(neighbourhood_census(default_catalog(6)), path)
    assert main(["census", "--census-path", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "C1, C2, C3, C4, C5, C6" in out
    assert out.rstrip().endswith("no violations")

    assert main(["census", "--census_path", str(path)]) == EXIT_OK
    assert "C1, C2, C3, C4, C5, C6" in capsys.readouterr().out


def test_census_from_environment(monkeypatch, tmp_path, capsys):
    path = tmp_path / "census.g6"
    save_census(neighbourhood_census(default_catalog(4)), path)
    monkeypatch.setenv("NEIGHBOURHOOD_CENSUS_PATH", str(path))
    assert main(["census"]) == EXIT_OK


def test_census_builds_and_saves(tmp_path, capsys):
    output = tmp_path / "built.g6"
    assert main(["census", "--max-group-order", "5", "--output", str(output)]) == EXIT_OK
    assert output.read_text().startswith("# meta:")


def test_selftest_command(capsys):
    assert main(["selftest", "--max-order", "4", "--samples", "3", "--seed", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("pass") == 3
    assert "FAIL" not in out
