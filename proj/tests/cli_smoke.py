"""CLI smoke tests and a graph6 cross-check against networkx."""

import itertools
import json
import random
import subprocess
import sys
import tempfile
from pathlib import Path

import networkx as nx

CLI = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f" ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def edges_from_check(out):
    for line in out.splitlines():
        if line.startswith("edges"):
            return {tuple(map(int, e.split("-"))) for e in line.split()[1:]}
    return None


# construct / check
r = run("construct", "--family", "H", "--n", "10", "--k", "9", "--a", "4")
expect("construct H exits 0", r.returncode == 0, r.stderr)
h = nx.from_graph6_bytes(r.stdout.strip().encode())
expect("construct H(10,9,4) edge count", h.number_of_edges() == 30, h.number_of_edges())

r = run("check", "Cl", "--k", "5")
expect("check C4 exits 0", r.returncode == 0, r.stderr)
expect("check C4 circumference", "circumference 4" in r.stdout, r.stdout)

r = run("check", g6(nx.complete_bipartite_graph(2, 4)), "--k", "5")
expect("check K_{2,4} classifies", r.returncode == 0 and "verdict" in r.stdout, r.stdout)

# verify
r = run("verify", "--mode", "theorem-t3small", "--k", "6", "--n-min", "6", "--n-max", "7", "--format", "json")
expect("verify t3small exits 0", r.returncode == 0, r.stderr)
reports = json.loads(r.stdout)
expect("verify emits one report per n", len(reports) == 2, len(reports))
expect("verify report fields", all(x["counts"]["violations"] == 0 and x["schema_version"] == 1 for x in reports))

r = run("verify", "--mode", "kopylov", "--k", "6", "--n-min", "6", "--n-max", "7", "--format", "csv")
expect("verify csv header", r.stdout.startswith("theorem,n,k,checked,violations,coverage_mode,runtime_ms"), r.stdout)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "r.json"
    r = run("verify", "--mode", "seven-cycle", "--n-min", "8", "--n-max", "8", "--out", str(out))
    expect("verify --out writes a file", r.returncode == 0 and out.exists(), r.stderr)

    # C6 plus a vertex on two vertices at distance 2: c = 6 < 7, far below the maximum
    g = nx.cycle_graph(6)
    g.add_edges_from([(6, 0), (6, 2)])
    forged = Path(tmp) / "forged.g6"
    forged.write_text(g6(g) + "\n")
    r = run("verify", "--mode", "kopylov", "--k", "7", "--source", "file", "--file", str(forged))
    expect("forged file yields exit 1", r.returncode == 1, r.returncode)

    trace = Path(tmp) / "trace.json"
    r = run("construct", "--family", "H", "--n", "14", "--k", "9", "--a", "4")
    r = run("procedure", r.stdout.strip(), "--k", "9", "--trace", str(trace))
    expect("procedure exits 0", r.returncode == 0, r.stderr)
    expect("procedure trace is JSON", trace.exists() and "steps" in json.loads(trace.read_text()))

r = run("oracle", "--max-n", "6", "--nonham-max-n", "7", "--format", "text")
expect("oracle exits 0", r.returncode == 0, r.stderr[-400:])

# usage errors
expect("unknown mode exits 2", run("verify", "--mode", "nope").returncode == 2)
expect("missing file exits 2", run("verify", "--mode", "kopylov", "--k", "7", "--source", "file", "--file", "/nonexistent/x").returncode == 2)
expect("bad graph6 exits 2", run("check", "B~~").returncode == 2)
expect("bad construction exits 2", run("construct", "--family", "H", "--n", "5", "--k", "9", "--a", "4").returncode == 2)
expect("help exits 0", run("--help").returncode == 0)

# graph6 against networkx: all labeled graphs n <= 5 and random graphs up to n = 40
rng = random.Random(11)
samples = []
for n in range(1, 6):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = nx.empty_graph(n)
        g.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        samples.append(g)
for _ in range(60):
    samples.append(nx.gnp_random_graph(rng.randint(6, 40), rng.random(), seed=rng.randint(0, 10**6)))

mismatch = 0
for g in rng.sample(samples, 250) + samples[-60:]:
    r = run("check", "--quick", g6(g))
    want = {tuple(sorted(e)) for e in g.edges()}
    if r.returncode != 0 or edges_from_check(r.stdout) != want:
        mismatch += 1
expect("graph6 decoding agrees with networkx", mismatch == 0, f"{mismatch} mismatches")

for n in range(5, 40, 3):
    r = run("construct", "--family", "H", "--n", str(n), "--k", "5", "--a", "2")
    ours = r.stdout.strip()
    g = nx.from_graph6_bytes(ours.encode())
    expect(f"graph6 encoding agrees with networkx (n={n})", g6(g) == ours, ours)

expect("K3 is Bw in networkx", g6(nx.complete_graph(3)) == "Bw")
expect("C4 is Cl in networkx", g6(nx.cycle_graph(4)) == "Cl")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
