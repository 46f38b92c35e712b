"""Time the compiled engine against the interpreted one.

The package ships ``tecc/_core.py`` and, when a C toolchain was present at
install time, a compiled extension built from the same file.  This script
loads both (the interpreted copy via its source path, sidestepping the
shadowing ``.so``), runs each on identical random connected multigraphs,
and prints a small table.

Usage: python3 benchmarks/compare_backends.py [--sizes 14,16,17] [--repeat 3]
"""

import argparse
import importlib.util
import os
import random
import statistics
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)
sys.path.insert(0, os.path.join(ROOT, "src"))

import tecc  # noqa: E402
import tecc._core as active_core  # noqa: E402


def load_interpreted():
    path = os.path.join(ROOT, "src", "tecc", "_core.py")
    spec = importlib.util.spec_from_file_location("tecc_core_interpreted", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def connected_random(n, m, seed):
    rng = random.Random(seed)
    pairs = [(rng.randrange(i), i) for i in range(1, n)]
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    return n, pairs


def csr(n, pairs):
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    off = [0] * (n + 1)
    for i in range(n):
        off[i + 1] = off[i] + deg[i]
    cur = off[:]
    adj_eid = [0] * (2 * len(pairs))
    adj_other = [0] * (2 * len(pairs))
    for eid, (u, v) in enumerate(pairs):
        adj_eid[cur[u]], adj_other[cur[u]] = eid, v
        cur[u] += 1
        adj_eid[cur[v]], adj_other[cur[v]] = eid, u
        cur[v] += 1
    return off, adj_eid, adj_other


def run_engine(core, n, pairs, off, adj_eid, adj_other):
    eu = [u for u, _ in pairs]
    ev = [v for _, v in pairs]
    engine = core.Engine(n, off, adj_eid, adj_other, eu, ev)
    started = time.perf_counter()
    engine.run(0)
    elapsed = time.perf_counter() - started
    return elapsed, len(engine.components), engine.events


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="14,16,17", help="log2 vertex counts, comma separated")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    interpreted = load_interpreted()
    backend = tecc.engine_backend()
    print(f"active backend: {backend} ({os.path.basename(active_core.__file__)})")
    if backend != "compiled":
        print("note: no compiled extension installed; comparing the interpreter with itself")
    print()
    print(f"{'n':>10} {'m':>10} {'interpreted':>12} {'active':>12} {'speedup':>8}")

    for exp in (int(s) for s in args.sizes.split(",")):
        n = 1 << exp
        m = 3 * n
        n, pairs = connected_random(n, m, seed=exp)
        off, adj_eid, adj_other = csr(n, pairs)
        times = {}
        for label, core in (("interpreted", interpreted), ("active", active_core)):
            runs = []
            parts = events = None
            for _ in range(args.repeat):
                elapsed, parts, events = run_engine(core, n, pairs, off, adj_eid, adj_other)
                runs.append(elapsed)
            times[label] = statistics.median(runs)
            if label == "interpreted":
                reference = (parts, events)
            elif (parts, events) != reference:
                raise SystemExit("backends disagree on the decomposition")
        speed = times["interpreted"] / times["active"]
        print(
            f"{n:>10} {m:>10} {times['interpreted']:>11.3f}s {times['active']:>11.3f}s"
            f" {speed:>7.2f}x"
        )


if __name__ == "__main__":
    main()
