import io
import json
import subprocess
import sys

import pytest

import distpoly.cli as cli
from distpoly.cli import EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_VERIFY, main
from distpoly.closed_forms import DistPolyResult
from distpoly.graph import complete_multipartite, cycle_graph, to_edge_list, to_graph6
from distpoly.polynomial import IntPoly
from distpoly.verify import Check


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(to_edge_list(cycle_graph(4)))
    return str(path)


def test_compute_c4_text(capsys, c4_file):
    code, out, _ = run(capsys, "compute", c4_file)
    assert code == EXIT_OK
    assert "D_k(G) = k^4 - 2k^3 - k^2 + 2k" in out
    assert "D(G) = 3" in out
    assert "orbits q = 1: {1,2,3,4}" in out
    assert "zero multiplicity = 1" in out
    assert "provenance: closed-form:cycle(4)" in out


def test_compute_c4_json(capsys, c4_file):
    code, out, _ = run(capsys, "compute", c4_file, "--output", "json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert IntPoly.from_json(rep["poly"]) == IntPoly([0, 2, -1, -2, 1])
    assert rep["poly_text"] == "k^4 - 2k^3 - k^2 + 2k"
    assert (rep["aut_order"], rep["dist_number"], rep["orbits"], rep["zero_multiplicity"]) == (
        "8", "3", "1", "1",
    )
    assert rep["n"] == "4"
    assert rep["phi"]["den"] == "8"
    assert rep["multiplicity_ok"] is True


def test_compute_k1_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("n 1\n"))
    code, out, _ = run(capsys, "compute", "-")
    assert code == EXIT_OK
    assert "D_k(G) = k\n" in out and "D(G) = 1" in out


def test_compute_k23_complement(capsys, tmp_path):
    path = tmp_path / "k23.txt"
    path.write_text(to_edge_list(complete_multipartite([2, 3])))
    code, out, _ = run(capsys, "compute", str(path))
    assert code == EXIT_OK
    assert "k^5 - 4k^4 + 5k^3 - 2k^2" in out
    assert "complement-reduction" in out


def test_compute_force_oracle_agrees(capsys, c4_file):
    _, a, _ = run(capsys, "compute", c4_file, "--output", "json")
    _, b, _ = run(capsys, "compute", c4_file, "--output", "json", "--force-oracle")
    ra, rb = json.loads(a), json.loads(b)
    assert ra["poly"] == rb["poly"] and rb["provenance"] == ["oracle"]


def test_compute_graph6_many(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("A_\nBw\n" + to_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run(capsys, "compute", str(path), "--format", "graph6", "--output", "json")
    assert code == EXIT_OK
    polys = [IntPoly.from_json(json.loads(line)["poly"]) for line in out.splitlines()]
    assert polys == [IntPoly([0, -1, 1]), IntPoly([0, 2, -3, 1]), IntPoly([0, 4, 0, -5, 0, 1])]


def test_json_round_trip_and_determinism(capsys, c4_file):
    _, first, _ = run(capsys, "compute", c4_file, "--output", "json")
    _, second, _ = run(capsys, "compute", c4_file, "--output", "json")
    assert first == second
    rep = json.loads(first)
    assert IntPoly.from_json(rep["poly"]).to_json() == rep["poly"]


def test_big_integers_are_strings(capsys):
    code, out, _ = run(capsys, "family", "complete", "25", "--output", "json")
    rep = json.loads(out)
    assert rep["aut_order"] == "15511210043330985984000000"
    assert all(isinstance(c, str) for c in rep["poly"]["coeffs"])


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["family", "cycle", "6"], "k^6 - 3k^4 - 4k^3 + 8k^2 - 2k"),
        (["family", "multipartite", "2:3"], "k^6 - 3k^5 - 3k^4 + 11k^3 + 2k^2 - 8k"),
        (["family", "path", "1"], "D_k(G) = k\n"),
        (["family", "star", "3"], "k^4 - 3k^3 + 2k^2"),
    ],
)
def test_family(capsys, argv, needle):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert needle in out


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "multipartite", "2:1", "2:1"],
        ["family", "multipartite", "2"],
        ["family", "path", "0"],
        ["family", "cycle", "x"],
        ["family", "path", "3", "4"],
    ],
)
def test_family_bad_params(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_PARSE and err.startswith("error:")


def test_parse_error_exit(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("n 3\n0 1\n1 1\n")
    code, _, err = run(capsys, "compute", str(path))
    assert code == EXIT_PARSE and "line 3" in err


def test_missing_file_exit(capsys, tmp_path):
    code, _, _ = run(capsys, "compute", str(tmp_path / "nope.txt"))
    assert code == EXIT_PARSE


def test_resource_exit(capsys, tmp_path):
    path = tmp_path / "g.txt"
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
    path.write_text("n 9\n" + "".join(f"{u} {v}\n" for u, v in edges))
    code, _, err = run(capsys, "compute", str(path))
    assert code == EXIT_RESOURCE and "resource limit" in err


def test_internal_error_exit(capsys, monkeypatch, c4_file):
    monkeypatch.setattr(cli, "vertex_orbits", lambda g: [(0,), (1,), (2,), (3,)])

    def bad_poly(g, budget):
        return DistPolyResult(IntPoly([0, 1]), 8, ("broken",))

    monkeypatch.setattr(cli, "compute_dist_poly", bad_poly)
    code, _, err = run(capsys, "compute", c4_file)
    assert code == EXIT_INTERNAL and "internal error" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "5", "--suites", "oracle,cycles,segments,phi")
    assert code == EXIT_OK
    assert "FAILED" not in out
    assert out.count("PASS") == 4


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_suites", lambda *a: [Check("oracle", "P2", False, "mismatch")])
    code, out, _ = run(capsys, "verify")
    assert code == EXIT_VERIFY
    assert "FAILED oracle: P2: mismatch" in out


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suites", "bogus")
    assert code == EXIT_PARSE


def test_module_entry_point(c4_file):
    proc = subprocess.run(
        [sys.executable, "-m", "distpoly", "compute", c4_file, "--output", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["poly_text"] == "k^4 - 2k^3 - k^2 + 2k"
