import json
import subprocess
import sys

import pytest

from weakiasi.formats import read_graph, read_labeling, write_graph, write_labeling


def run(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "weakiasi", *map(str, args)],
        capture_output=True, text=True, cwd=cwd,
    )


@pytest.fixture
def p3(tmp_path):
    g = tmp_path / "p3.gr"
    lab = tmp_path / "p3.json"
    assert run("gen", "path(3)", "-o", g).returncode == 0
    lab.write_text('{"0":[3],"1":[9,10],"2":[27]}')
    return g, lab


def test_gen_round_trip_is_byte_exact(tmp_path):
    out = tmp_path / "w.gr"
    assert run("gen", "join(cycle(5),complete(1))", "-o", out).returncode == 0
    text = out.read_text()
    assert write_graph(read_graph(text)) == text
    assert text.splitlines()[0] == "p edge 6 10"


def test_labeling_round_trip_is_byte_exact(p3):
    _, lab = p3
    text = lab.read_text()
    assert write_labeling(read_labeling(text)).strip() == text.strip()


def test_solved_labeling_re_verifies(tmp_path):
    g = tmp_path / "k5.gr"
    cert = tmp_path / "k5.json"
    run("gen", "complete(5)", "-o", g)
    res = run("solve", f"@{g}", "-o", cert)
    assert res.returncode == 0
    obj = json.loads(cert.read_text())
    assert obj["value"] == 6
    lab = tmp_path / "lab.json"
    lab.write_text(json.dumps(obj["labeling"]))
    v = run("verify", g, lab, "--format", "json")
    assert v.returncode == 0
    assert len(json.loads(v.stdout)["mono_edges"]) == 6


@pytest.mark.parametrize("expr, value", [
    ("cycle(5)", 1), ("complete(5)", 6), ("join(complete(1),cycle(5))", 4), ("cycle(6)", 0),
])
def test_solve_values(expr, value):
    res = run("solve", expr)
    assert res.returncode == 0
    assert json.loads(res.stdout)["value"] == value


def test_join_note_goes_to_stderr():
    res = run("solve", "join(complete(1),cycle(5))")
    assert "right operand ids 0..4 -> 1..5" in res.stderr
    json.loads(res.stdout)


@pytest.mark.parametrize("expr, line", [
    ("cycle(5)", "1 3 5"), ("cycle(4)", "0 2 4"), ("complete(3)", "1 3"),
])
def test_spectrum(expr, line):
    res = run("spectrum", expr)
    assert (res.returncode, res.stdout.strip()) == (0, line)


def test_verify_weak_exit_zero(p3):
    res = run("verify", *p3)
    assert res.returncode == 0
    assert "weak: true" in res.stdout and "mono_edges: 0" in res.stdout


def _pair(tmp_path, labels):
    g = tmp_path / "p2.gr"
    run("gen", "path(2)", "-o", g)
    lab = tmp_path / "l.json"
    lab.write_text(json.dumps(labels))
    return g, lab


def test_verify_vertex_collision_exit_one(tmp_path):
    res = run("verify", *_pair(tmp_path, {"0": [5], "1": [5]}), "--format", "json")
    assert res.returncode == 1
    assert json.loads(res.stdout)["iasi"] is False


def test_verify_large_sumset_exit_one(tmp_path):
    res = run("verify", *_pair(tmp_path, {"0": [1, 2], "1": [1, 3]}), "--format", "json")
    assert res.returncode == 1
    report = json.loads(res.stdout)
    assert report["weak"] is False


@pytest.mark.parametrize("content", ["not json", '{"0":[]}', '{"0":[3],"1":[-1]}', '{"x":[1]}'])
def test_verify_malformed_labeling_exit_two(tmp_path, content):
    g, lab = _pair(tmp_path, {})
    lab.write_text(content)
    res = run("verify", g, lab)
    assert res.returncode == 2 and res.stderr.startswith("error:")


def test_verify_malformed_graph_exit_two(tmp_path, p3):
    _, lab = p3
    bad = tmp_path / "bad.gr"
    bad.write_text("p edge 3 1\ne 0 7\n")
    res = run("verify", bad, lab)
    assert res.returncode == 2 and "line 2" in res.stderr


def test_verify_missing_file_exit_two(tmp_path, p3):
    res = run("verify", p3[0], tmp_path / "missing.json")
    assert res.returncode == 2


@pytest.mark.parametrize("args", [
    ("solve", "cyc(5)"), ("solve", "cycle(5"), ("solve", "path(0)"), ("solve", "cycle(2,3)"),
    ("spectrum", "complete(25)"), ("check", "NOPE", "-p", "n=1"), ("check", "COMPLETE_GRAPH", "-p", "n=x..y"),
])
def test_error_exit_two(args):
    res = run(*args)
    assert res.returncode == 2
    assert res.stderr.startswith("error:") and res.stdout == ""


def test_syntax_error_reports_column():
    res = run("solve", "union(path(3) path(3))")
    assert res.returncode == 2 and "column 15" in res.stderr


def test_check_exit_codes():
    assert run("check", "CYCLE_PARITY", "-p", "n=3..12").returncode == 0
    assert run("check", "COMPLETE_GRAPH", "-p", "n=2..8").returncode == 0
    assert run("check", "WHEEL_SPARING", "-p", "n=3..10").returncode == 1
    assert run("check", "COMPLETE_GRAPH", "-p", "n=5,30").returncode == 2


@pytest.mark.parametrize("args", [
    ("check", "JOIN_PC_SPARING", "-p", "m=1..3", "-p", "n=3..4", "--convention", "both", "--format", "md"),
    ("solve", "join(fan(4),cycle(5))"),
    ("spectrum", "wheel(7)"),
    ("gen", "ringsum(cycle(6),path(4))"),
])
def test_output_is_deterministic(args):
    first, second = run(*args), run(*args)
    assert first.stdout == second.stdout and first.stdout


def test_output_flag_matches_stdout(tmp_path):
    out = tmp_path / "r.csv"
    run("check", "FAN_SPARING", "-p", "n=2..6", "-o", out)
    assert out.read_text() == run("check", "FAN_SPARING", "-p", "n=2..6").stdout
