import json
from pathlib import Path

import pytest

from sppreserve import read_graph, read_weights
from sppreserve.cli import main

DATA = Path(__file__).parent / "data"


def run(*argv):
    return main([str(a) for a in argv])


def test_gen_then_audit_grid_end_to_end(tmp_path):
    g = tmp_path / "g.graph"
    p = tmp_path / "p.paths"
    assert run("gen", "--family", "grid", "--L", "3", "--alpha-g", "2/1",
               "--out", g, "--paths", p) == 0
    assert g.exists() and p.exists()
    assert run("audit", "--family", "grid", "--L", "3", "--alpha", "2/1") == 0


def test_reweight_then_check_exact(tmp_path, capsys):
    g = tmp_path / "shortcut5.graph"
    h = tmp_path / "h.weights"
    assert run("gen", "--family", "path-shortcut", "--n", "5", "--out", g) == 0
    assert run("reweight", "dag", "--in", g, "--out", h) == 0
    out = capsys.readouterr().out
    assert "aspect ratio 25/6" in out
    assert run("check", "exact", "--g", g, "--h", h) == 0


def test_check_fails_with_witness_json(tmp_path):
    g = tmp_path / "fig1.graph"
    ones = tmp_path / "ones.weights"
    report = tmp_path / "report.json"
    assert run("gen", "--family", "fig1", "--out", g) == 0
    graph = read_graph(g)
    ones.write_text("".join(f"w {u} {v} 1/1\n" for u, v, _ in graph.edges))
    assert run("check", "exact", "--g", g, "--h", ones, "--json", report) == 1
    payload = json.loads(report.read_text())
    assert payload["verdict"] == "fail"
    assert payload["check"].startswith("exact")
    assert any(w["s"] == 0 and w["t"] == 3 for w in payload["witnesses"])
    first = payload["witnesses"][0]
    assert set(first) >= {"s", "t", "path", "w_g", "w_h", "d_g", "d_h", "simple"}
    assert "/" in first["w_g"]  # rationals serialized as p/q strings


def test_fig1_gen_matches_golden(tmp_path):
    g = tmp_path / "fig1.graph"
    w = tmp_path / "fig1_h.weights"
    assert run("gen", "--family", "fig1", "--out", g, "--weights", w) == 0
    assert g.read_text() == (DATA / "fig1.graph").read_text()
    assert w.read_text() == (DATA / "fig1_h.weights").read_text()
    graph = read_graph(g)
    wmap = read_weights(w, graph)
    assert run("check", "exact", "--g", g, "--h", w) == 0


def test_decimal_arguments_rejected(capsys):
    assert run("audit", "--family", "grid", "--L", "3", "--alpha", "2.0") == 2


def test_unknown_flag_is_usage_error():
    assert run("gen", "--family", "grid", "--L", "3", "--whatever") == 2


def test_missing_file_is_io_error(tmp_path):
    assert run("check", "exact", "--g", tmp_path / "nope.graph", "--h", tmp_path / "x") == 2


def test_audit_failure_exit_code():
    assert run("audit", "--family", "undir-chain", "--k", "2", "--mode", "approx",
               "--alpha", "5/4") == 1


def test_budget_exhaustion_exit_code(tmp_path):
    g = tmp_path / "c.graph"
    h = tmp_path / "c.weights"
    assert run("gen", "--family", "undir-chain", "--k", "2", "--out", g) == 0
    graph = read_graph(g)
    h.write_text("".join(f"w {u} {v} {w.numerator}/{w.denominator}\n"
                         for u, v, w in graph.edges))
    assert run("check", "two-sided", "--g", g, "--h", h,
               "--alpha-h", "2/1", "--alpha-g", "2/1", "--budget", "10") == 2


def test_optimize_sweep_and_report(tmp_path, capsys):
    certs = []
    for k in (2, 3):
        g = tmp_path / f"chain{k}.graph"
        p = tmp_path / f"chain{k}.paths"
        cert = tmp_path / f"cert{k}.json"
        assert run("gen", "--family", "dir-chain", "--k", k, "--out", g, "--paths", p) == 0
        assert run("optimize", "min-aspect", "--g", g, "--paths", p,
                   "--eps", "1/1000000000", "--param", k, "--json", cert,
                   "--out", tmp_path / f"h{k}.weights") == 0
        certs.append(cert)
    capsys.readouterr()
    assert run("report", *certs) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert len(lines) == 2
    assert lines[0].startswith("2\t2000000001/1000000000")
    growth = lines[1].split("\t")[2]
    num, den = growth.split("/")
    assert int(num) / int(den) >= 2


def test_report_rejects_mixed_kinds(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"optimum": "1/1", "meta": {"kind": "min-aspect", "param": 1, "eps": "1/10"}}))
    b.write_text(json.dumps({"optimum": "1/1", "meta": {"kind": "grid-lb", "param": 1, "eps": "1/10"}}))
    assert run("report", a, b) == 2


def test_single_run_report(tmp_path, capsys):
    a = tmp_path / "a.json"
    a.write_text(json.dumps({"optimum": "7/2", "meta": {"kind": "grid-lb", "param": 2, "eps": "1/10"}}))
    assert run("report", a) == 0
    out = capsys.readouterr().out
    assert "7/2" in out


def test_grid_lb_cli(tmp_path):
    cert = tmp_path / "lb.json"
    assert run("optimize", "grid-lb", "--L", "2", "--alpha-g", "2/1",
               "--alpha-h", "2/1", "--eps", "1/1000000000", "--json", cert) == 0
    payload = json.loads(cert.read_text())
    assert payload["meta"]["kind"] == "grid-lb"
    num, den = payload["optimum"].split("/")
    assert int(num) / int(den) >= 4


def test_manifest_determinism(tmp_path):
    # identical invocation, run twice: byte-identical outputs, manifests
    # differing only in the wall-clock duration field
    g = tmp_path / "g.graph"
    m = tmp_path / "m.json"
    snapshots = []
    for _ in range(2):
        assert run("gen", "--family", "dir-chain", "--k", "3", "--out", g,
                   "--manifest", m) == 0
        snapshots.append((g.read_bytes(), json.loads(m.read_text())))
    (bytes1, man1), (bytes2, man2) = snapshots
    assert bytes1 == bytes2
    man1.pop("duration_s")
    man2.pop("duration_s")
    assert man1 == man2


def test_version_flag(capsys):
    assert run("--version") == 0
