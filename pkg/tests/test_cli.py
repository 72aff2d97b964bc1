"""End-to-end runs of the command line driver through cli.main."""

import csv
import json
import math

import pytest

from localmaxcut import (closed_form_f2, exact_prob_d3, girth, load_edge_list,
                         make_named, optimal_preset, zk_edge_d2)
from localmaxcut.cli import main, parse_graph_spec


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run_cli(capsys, *argv, "--json", "--no-timestamp")
    return rc, json.loads(out), err


def test_parse_graph_spec():
    assert parse_graph_spec("cycle:6").n == 6
    assert parse_graph_spec("named:petersen").edges == make_named("PETERSEN").edges
    g = parse_graph_spec("random:20,3,4,7")
    assert g.degree == 3 and girth(g) >= 4
    for bad in ("cycle", "mesh:4", "random:20,3", "cycle:x"):
        with pytest.raises(ValueError):
            parse_graph_spec(bad)


def test_graph_spec_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n1 2\n0 2\n")
    assert parse_graph_spec(f"file:{path}").n == 3


def test_usage_errors_exit_2(capsys):
    assert run_cli(capsys, "verify", "--graph", "mesh:4")[0] == 2
    assert run_cli(capsys, "verify", "--graph", "cycle:27")[0] == 2  # over the cap
    assert run_cli(capsys, "classical", "exact", "--degree", "2",
                   "--q", "a,b,c")[0] == 2
    assert run_cli(capsys, "classical", "curve", "--degree", "2",
                   "--resolution", "1")[0] == 2
    assert run_cli(capsys, "verify", "--graph", "cycle:7", "--threads", "0")[0] == 2
    rc, _, err = run_cli(capsys, "classical", "run", "--graph", "cycle:5",
                         "--q", "0,0,1.5")
    assert rc == 2
    assert err.startswith("error:")


def test_config_echo_and_seed_default(capsys):
    rc, doc, _ = run_json(capsys, "classical", "exact", "--degree", "2")
    assert rc == 0
    cfg = doc["config"]
    assert cfg["command"] == "classical"
    assert cfg["subcommand"] == "exact"
    assert cfg["seed"] == 0
    assert cfg["threads"] == 1
    assert cfg["p"] == 0.5
    assert cfg["q"] == [0.0, 0.0, 0.8]
    assert "timestamp" not in doc
    assert doc["value"] == pytest.approx(0.95, abs=1e-12)


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("LOCALMAXCUT_THREADS", "2")
    rc, doc, _ = run_json(capsys, "classical", "exact", "--degree", "2")
    assert rc == 0
    assert doc["config"]["threads"] == 2


def test_byte_stable_output(capsys):
    argv = ("classical", "exact", "--degree", "3", "--json", "--no-timestamp")
    rc1, out1, _ = run_cli(capsys, *argv)
    rc2, out2, _ = run_cli(capsys, *argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_timestamp_present_by_default(capsys):
    rc, out, _ = run_cli(capsys, "classical", "exact", "--degree", "2", "--json")
    assert rc == 0
    assert "timestamp" in json.loads(out)


def test_classical_exact_explicit_params(capsys):
    rc, doc, _ = run_json(capsys, "classical", "exact", "--degree", "3",
                          "--p", "0.5", "--q", "0,0,0,1")
    assert rc == 0
    assert doc["value"] == pytest.approx(197 / 256, abs=1e-12)


def test_classical_run(capsys):
    rc, doc, _ = run_json(capsys, "classical", "run", "--graph", "cycle:200",
                          "--trials", "20", "--seed", "11")
    assert rc == 0
    stats = doc["stats"]
    assert stats["trials"] == 20
    assert 0.8 <= stats["mean"] <= 1.0
    assert doc["tree_value"] == pytest.approx(0.95, abs=1e-12)
    assert doc["config"]["seed"] == 11
    # irregular graphs are a usage error
    rc2, _, _ = run_cli(capsys, "classical", "run", "--graph", "named:PETERSEN",
                        "--q", "0,0,1")
    assert rc2 == 2  # q has 3 entries but degree 3 wants 4


def test_classical_curve_csv(capsys, tmp_path):
    out = tmp_path / "curve.csv"
    rc, stdout, _ = run_cli(capsys, "classical", "curve", "--degree", "2",
                            "--resolution", "5", "--out", str(out))
    assert rc == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["p", "value"]
    ps = [float(r[0]) for r in rows[1:]]
    vals = [float(r[1]) for r in rows[1:]]
    assert ps == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    assert vals[1] == pytest.approx(vals[3], abs=1e-12)  # p <-> 1-p symmetry
    assert max(vals) == pytest.approx(0.95, abs=1e-12)
    assert "peak p=0.500000" in stdout


def test_csv_to_stdout_moves_summary_to_stderr(capsys):
    rc, out, err = run_cli(capsys, "classical", "curve", "--degree", "3",
                           "--resolution", "3")
    assert rc == 0
    assert out.splitlines()[0] == "p,value"
    assert "config" in err and "peak" in err


def test_sweep_csv_matches_closed_form(capsys, tmp_path):
    out = tmp_path / "sweep.csv"
    rc, stdout, _ = run_cli(capsys, "sweep", "--degree", "2",
                            "--resolution", "8", "--out", str(out))
    assert rc == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["gamma", "beta", "value"]
    assert len(rows) == 1 + 64
    for g, b, v in (map(float, r) for r in rows[1:]):
        assert 0.0 <= g < 2 * math.pi  # half-open grid
        assert 0.0 <= b < math.pi
        assert v == pytest.approx(closed_form_f2(1, (g, b)), abs=1e-12)
    assert "argmax" in stdout


def test_verify_cycle(capsys):
    rc, doc, _ = run_json(capsys, "verify", "--graph", "cycle:7",
                          "--samples", "5")
    assert rc == 0
    assert doc["ok"] is True
    assert doc["max_abs_diff_full"] <= 1e-9
    assert doc["max_abs_diff_term"] <= 1e-9
    assert doc["graph"] == {"n": 7, "edges": 7, "degree": 2, "girth": 7}
    assert doc["config"]["tol"] == 1e-9


def test_graph_gen_roundtrip(capsys, tmp_path):
    out = tmp_path / "petersen.txt"
    rc, stdout, _ = run_cli(capsys, "graph", "gen", "--graph",
                            "named:PETERSEN", "--out", str(out))
    assert rc == 0
    assert "n 10 edges 15 degree 3 girth 5" in stdout
    g = load_edge_list(out.read_text())
    assert g.edges == make_named("PETERSEN").edges
    # and the file feeds back in through the spec language
    rc2, doc, _ = run_json(capsys, "ham", "dump", "--graph", f"file:{out}")
    assert rc2 == 0
    assert doc["hamiltonian"]["n"] == 10


def test_ham_dump_triangle(capsys):
    rc, doc, _ = run_json(capsys, "ham", "dump", "--graph", "cycle:3")
    assert rc == 0
    terms = doc["hamiltonian"]["terms"]
    assert terms[0] == {"subset": [], "weight": 2.25}
    assert [t["weight"] for t in terms[1:]] == [-0.75, -0.75, -0.75]


def test_qaoa_explain(capsys):
    rc, doc, _ = run_json(capsys, "qaoa", "explain", "--graph", "cycle:7",
                          "--subset", "0,1", "--gamma", "0.37",
                          "--beta", "0.21")
    assert rc == 0
    # girth 7 puts C_7 above the tree threshold, so the edge expectation
    # equals its closed form
    assert doc["value"] == pytest.approx(zk_edge_d2((0.37, 0.21)), abs=1e-12)
    assert doc["breakdown"]["K"] == [0, 1]
    assert doc["config"]["subset"] == [0, 1]
    assert len(doc["breakdown"]["contributions"]) == 4


def test_out_writes_json_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    rc, stdout, _ = run_cli(capsys, "classical", "exact", "--degree", "2",
                            "--out", str(out), "--no-timestamp")
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["value"] == pytest.approx(0.95, abs=1e-12)
    # human summary still lands on stdout
    assert stdout.startswith("config ")
    assert "value 0.95" in stdout


def test_reproduce_degree_2(capsys):
    rc, doc, _ = run_json(capsys, "reproduce", "--degree", "2")
    assert rc == 0
    block = doc["degrees"]["2"]
    assert block["winner"] == "classical"
    assert block["holds"] is True
    assert block["classical"]["value"] == pytest.approx(0.95, abs=1e-6)
    assert block["quantum"]["value"] == pytest.approx(0.93937, abs=1e-4)
    assert block["separation"] == pytest.approx(
        block["classical"]["value"] - block["quantum"]["value"], abs=1e-15)
    assert doc["holds"] is True


def test_reproduce_human_lines(capsys):
    rc, out, _ = run_cli(capsys, "reproduce", "--degree", "2",
                         "--no-timestamp")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("config ")
    assert any("classical wins" in ln for ln in lines)
    assert lines[-1] == "PASS"
