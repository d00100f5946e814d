"""One test per acceptance criterion, exact (tolerance 0).

Each test records its label with the ``criterion`` fixture; the PASS/FAIL
summary is printed at the end of the pytest run.
"""

import contextlib
import csv
import io
import json
import random
import subprocess
import sys
import time
from itertools import combinations

from brute import brute_phi
from conftest import random_graph
from golden_specs import GOLDEN_DIR, SWEEPS, audit_table
from weakiasi import Graph, LabelSet, make_complete, make_cycle, sumset
from weakiasi.cli import main
from weakiasi.graph import complement
from weakiasi.labels import Labeling, is_weak_iasi, mono_indexed_edges, restrict
from weakiasi.sparing import (
    concurrent_feasible_patterns, concurrent_min_mono, mono_count_spectrum,
    realize_labeling, sparing_exact, sparing_oracle,
)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([str(a) for a in argv])
    return code, out.getvalue()


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def test_c1_sumset_laws(criterion):
    criterion("C1 sumset laws over all nonempty A,B in {0..8}, < 5 s")
    start = time.perf_counter()
    sets = [LabelSet(x for x in range(9) if mask >> x & 1) for mask in range(1, 512)]
    for a in sets:
        for b in sets:
            s = len(sumset(a, b))
            lo, la, lb = max(len(a), len(b)), len(a), len(b)
            assert lo <= s <= la * lb
            assert (s == lo) == (min(la, lb) == 1)
    assert time.perf_counter() - start < 5


def _certificate_ok(g):
    cert = sparing_exact(g)
    assert cert.value == sparing_oracle(g)
    assert is_weak_iasi(g, cert.labeling)
    assert len(mono_indexed_edges(g, cert.labeling)) == cert.value


def test_c2_oracle_equivalence(criterion):
    criterion("C2 exact solver = subset oracle on all K6 subgraphs + 500 random graphs, < 60 s")
    start = time.perf_counter()
    for g in _all_graphs(6):
        _certificate_ok(g)
    rng = random.Random(2024)
    for _ in range(500):
        _certificate_ok(random_graph(rng, rng.randint(7, 12), rng.choice([0.2, 0.4, 0.6, 0.8])))
    assert time.perf_counter() - start < 60


def test_c3_closed_form_numbers(criterion):
    criterion("C3 bipartite 0, odd/even cycles, K_n, fan (vertices), disjoint-union additivity: all CONFIRMED, exit 0")
    runs = [
        ("BIPARTITE_ZERO", "-p", "family=path", "-p", "n=1..12"),
        ("BIPARTITE_ZERO", "-p", "family=cycle", "-p", "n=4,6,8,10,12,14"),
        ("BIPARTITE_ZERO", "-p", "family=star", "-p", "n=1..10"),
        ("BIPARTITE_ZERO", "-p", "family=kbip", "-p", "a=1..5", "-p", "b=1..5"),
        ("BIPARTITE_ZERO", "-p", "family=tree", "-p", "n=2..14", "-p", "seed=0..4"),
        ("ODD_CYCLE_ONE", "-p", "n=3,5,7,9,11,13,15"),
        ("COMPLETE_GRAPH", "-p", "n=2..9"),
        ("FAN_SPARING", "-p", "n=2..10", "--convention", "vertices"),
        ("UNION_ADDITIVITY", "-p", "family=random", "-p", "seed=0..99", "-p", "disjoint=1"),
    ]
    for argv in runs:
        code, out = cli("check", *argv)
        verdicts = [row["verdict"] for row in csv.DictReader(io.StringIO(out))]
        assert code == 0, argv
        assert verdicts and set(verdicts) == {"CONFIRMED"}, argv
    for n in range(3, 16):
        assert sparing_exact(make_cycle(n)).value == n % 2
    for n in range(2, 10):
        assert sparing_exact(make_complete(n)).value == (n - 1) * (n - 2) // 2


def test_c4_cycle_parity(criterion):
    criterion("C4 spectrum of C_n has the parity of n for n = 3..16, < 5 s")
    start = time.perf_counter()
    for n in range(3, 17):
        spectrum = mono_count_spectrum(make_cycle(n))
        assert spectrum and all(x % 2 == n % 2 for x in spectrum)
    assert time.perf_counter() - start < 5


def test_c5_adjudication_goldens(criterion):
    criterion("C5 check sweeps byte-identical to brute-force-audited goldens")
    for name, argv in SWEEPS.items():
        golden = (GOLDEN_DIR / name).read_text()
        audit_table(golden)
        _, out = cli(*argv)
        assert out == golden, name
    wheel = (GOLDEN_DIR / "wheel.csv").read_text().splitlines()[1:]
    for line in wheel:
        cells = line.split(",")
        n = int(cells[1][2:])
        if n % 2 == 0:
            assert cells[5] == "CONFIRMED"
        else:
            assert cells[5] == "REFUTED" and int(cells[4]) == (n + 3) // 2


def _concurrency_ok(g):
    feasible = {p.expanded for p in concurrent_feasible_patterns(g)}
    assert all(len(s) <= 1 for s in feasible)
    assert feasible == {frozenset()} | {frozenset([v]) for v in g.vertices}


def test_c6_concurrency(criterion):
    criterion("C6 concurrent patterns have <= 1 expanded vertex; C5 concurrent mono count = 3, < 30 s")
    start = time.perf_counter()
    for n in range(0, 6):
        for g in _all_graphs(n):
            _concurrency_ok(g)
    rng = random.Random(77)
    for _ in range(1000):
        _concurrency_ok(random_graph(rng, rng.randint(1, 8), rng.random()))
    c5 = make_cycle(5)
    assert concurrent_min_mono(c5).mono_in_g == 3
    cc = complement(c5)
    assert min(
        sum(1 for u, v in c5.edges if u not in s and v not in s)
        for s in [set()] + [{v} for v in range(5)]
        if not any(u in s and v in s for u, v in cc.edges)
    ) == 3
    assert time.perf_counter() - start < 30


def _random_weak_labeling(rng, g):
    order = list(g.vertices)
    rng.shuffle(order)
    chosen = set()
    for v in order:
        if rng.random() < 0.5 and not any(w in chosen for w in g.neighbors(v)):
            chosen.add(v)
    if rng.random() < 0.5:
        return realize_labeling(g, chosen)
    while True:
        lab = {}
        for v in g.vertices:
            size = rng.randint(2, 3) if v in chosen else 1
            lab[v] = LabelSet(rng.sample(range(200), size))
        f = Labeling(lab)
        if is_weak_iasi(g, f):
            return f


def test_c7_heredity(criterion):
    criterion("C7 restriction of a weak IASI to a subgraph stays weak (1000 pairs), < 10 s")
    start = time.perf_counter()
    rng = random.Random(99)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        f = _random_weak_labeling(rng, g)
        assert is_weak_iasi(g, f)
        keep = [v for v in g.vertices if rng.random() < 0.7]
        h = Graph(keep, (e for e in g.edges if e[0] in keep and e[1] in keep and rng.random() < 0.7))
        assert h.is_subgraph_of(g)
        assert is_weak_iasi(h, restrict(f, h))
    assert time.perf_counter() - start < 10


def _run(*args, cwd):
    return subprocess.run([sys.executable, "-m", "weakiasi", *map(str, args)],
                          capture_output=True, text=True, cwd=cwd)


def test_c8_cli_contract(criterion, tmp_path):
    criterion("C8 CLI round trip, determinism and 0/1/2 exit codes end to end")
    assert _run("gen", "wheel(6)", "-o", "w.gr", cwd=tmp_path).returncode == 0
    text = (tmp_path / "w.gr").read_text()
    assert _run("gen", "@w.gr", "-o", "w2.gr", cwd=tmp_path).returncode == 0
    assert (tmp_path / "w2.gr").read_text() == text

    solved = _run("solve", "@w.gr", cwd=tmp_path)
    assert solved.returncode == 0
    assert solved.stdout == _run("solve", "@w.gr", cwd=tmp_path).stdout
    cert = json.loads(solved.stdout)
    (tmp_path / "lab.json").write_text(json.dumps(cert["labeling"]))
    ok = _run("verify", "w.gr", "lab.json", cwd=tmp_path)
    assert ok.returncode == 0 and "weak: true" in ok.stdout

    (tmp_path / "bad.json").write_text('{"0":[1,2],"1":[1,3],"2":[5],"3":[7],"4":[9],"5":[11],"6":[13]}')
    assert _run("verify", "w.gr", "bad.json", cwd=tmp_path).returncode == 1
    (tmp_path / "junk.json").write_text("{")
    assert _run("verify", "w.gr", "junk.json", cwd=tmp_path).returncode == 2

    assert _run("check", "CYCLE_PARITY", "-p", "n=3..12", cwd=tmp_path).returncode == 0
    assert _run("check", "COMPLETE_GRAPH", "-p", "n=2..8", cwd=tmp_path).returncode == 0
    wheel = _run("check", "WHEEL_SPARING", "-p", "n=3..10", cwd=tmp_path)
    assert wheel.returncode == 1
    assert wheel.stdout == (GOLDEN_DIR / "wheel.csv").read_text()
    assert _run("check", "NO_SUCH_ID", cwd=tmp_path).returncode == 2
    assert _run("solve", "cycle(5", cwd=tmp_path).returncode == 2
    assert _run("spectrum", "cycle(25)", cwd=tmp_path).returncode == 2
