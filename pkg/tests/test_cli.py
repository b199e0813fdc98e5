import json
import subprocess
import sys

import pytest

from boundpoly.cli import main
from boundpoly.graphs import complete_graph, complete_minus_edge, emit_edge_list, emit_graph6, \
    prism_graph, wheel_graph, complete_bipartite

K4_TEXT = "1 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4"
K33_TEXT = "1 + 6*x^3*y + 6*x^3*y^2 + 9*x^4*y^2 + 20*x^3*y^3 + 15*x^2*y^4 + 6*x*y^5 + y^6"


def run(*args):
    return subprocess.run([sys.executable, "-m", "boundpoly", *args], capture_output=True, text=True)


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in [("k4", complete_graph(4)), ("k4e", complete_minus_edge(4)),
                    ("w4", wheel_graph(4)), ("prism", prism_graph()),
                    ("k33", complete_bipartite(3, 3))]:
        p = tmp_path / f"{name}.json"
        p.write_text(emit_edge_list(g))
        out[name] = str(p)
    e1 = tmp_path / "e1.json"
    e1.write_text('{"n": 1, "edges": []}')
    out["e1"] = str(e1)
    g6 = tmp_path / "k4.g6"
    g6.write_text(emit_graph6(complete_graph(4)))
    out["k4g6"] = str(g6)
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 0]]}')
    out["bad"] = str(bad)
    return out


def test_compute_family(capsys):
    assert main(["compute", "--family", "complete", "--n", "4", "--format", "plain"]) == 0
    assert capsys.readouterr().out.strip() == K4_TEXT


def test_compute_inputs(files, capsys):
    assert main(["compute", "--input", files["e1"]]) == 0
    assert capsys.readouterr().out.strip() == "1 + y"
    assert main(["compute", "--input", files["k4g6"], "--format", "latex"]) == 0
    assert capsys.readouterr().out.strip() == "1 + 4x^{3}y + 6x^{2}y^{2} + 4xy^{3} + y^{4}"


@pytest.mark.parametrize("method", ["auto", "formula", "enumerate"])
def test_compute_path_methods_agree(method, capsys):
    assert main(["compute", "--family", "path", "--n", "4", "--method", method,
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 4
    assert {(t["x"], t["y"]): int(t["c"]) for t in doc["coefficients"]}[(2, 2)] == 4


def test_compute_prism_falls_back_to_enumeration(capsys):
    assert main(["compute", "--family", "prism"]) == 0
    assert capsys.readouterr().out.strip() == K33_TEXT


def test_invariants_json(capsys):
    assert main(["invariants", "--family", "complete", "--n", "4"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert (r["gamma"], r["differential"], r["gamma_r"], r["kv"]) == (1, 2, 2, 3)


def test_invariants_disconnected(capsys):
    assert main(["invariants", "--family", "empty", "--n", "3"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["kv"] is None and r["notes"] and r["isolated"] == 3 and r["gamma"] == 3


def test_verify_all_on_cycle(capsys):
    assert main(["verify", "--family", "cycle", "--n", "6", "--check", "all"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 14 and all(line.startswith("PASS") for line in lines)


def test_verify_eval_on_input(files, capsys):
    assert main(["verify", "--input", files["k4"], "--check", "eval"]) == 0
    assert capsys.readouterr().out.strip() == "PASS eval (1 graph)"


def test_verify_catalog_edge_delete(capsys):
    assert main(["verify", "--catalog", "n<=4", "--check", "edge-delete,subdivision"]) == 0
    assert "PASS edge-delete (75 graphs)" in capsys.readouterr().out


def test_verify_failure_exit_code(monkeypatch, capsys):
    from boundpoly import verify
    monkeypatch.setitem(verify.CHECKS, "eval", lambda g: "planted failure")
    assert main(["verify", "--family", "cycle", "--n", "4", "--check", "eval"]) == 1
    assert "FAIL eval" in capsys.readouterr().out


def test_compare(files, capsys):
    assert main(["compare", "--input", files["k33"], "--input", files["prism"]]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["EQUAL", K33_TEXT]
    assert main(["compare", "--input", files["k4"], "--input", files["w4"]]) == 0
    capsys.readouterr()
    assert main(["compare", "--input", files["k4"], "--input", files["k4e"]]) == 1
    assert capsys.readouterr().out.startswith("DIFFERENT at coefficient (2,1)")
    assert main(["compare", "--input", files["k4e"], "--family", "complete", "--n", "4"]) == 1


def test_exit_codes_via_subprocess(files):
    assert run("compute", "--family", "complete", "--n", "4").returncode == 0
    r = run("compute", "--input", files["bad"])
    assert r.returncode == 2 and "error" in r.stderr
    assert run("compute", "--input", "/nonexistent.json").returncode == 2
    assert run("compute").returncode == 2
    assert run("compute", "--method", "formula", "--input", files["e1"]).returncode == 2
    assert run("compute", "--method", "formula", "--family", "prism").returncode == 2
    assert run("compute", "--family", "cycle").returncode == 2
    assert run("compute", "--family", "cycle", "--n", "2").returncode == 2
    assert run("compute", "--family", "cycle", "--n", "30", "--method", "enumerate").returncode == 3
    assert run("compute", "--family", "cycle", "--n", "30").returncode == 0
    assert run("compute", "--family", "cycle", "--n", "5", "--threads", "0").returncode == 2
    assert run("verify", "--catalog", "n<=99").returncode == 2
    assert run("verify", "--family", "cycle", "--n", "5", "--check", "nope").returncode == 2
    assert run("verify", "--family", "cycle", "--n", "9", "--max-n", "8").returncode == 3
    assert run("compare", "--input", files["k4"]).returncode == 2
    assert run("frobnicate").returncode == 2


def test_output_is_deterministic():
    a = run("compute", "--family", "wheel", "--n", "7", "--format", "json")
    b = run("compute", "--family", "wheel", "--n", "7", "--format", "json")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_console_script_installed():
    r = subprocess.run(["boundpoly", "compute", "--family", "complete", "--n", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == K4_TEXT
