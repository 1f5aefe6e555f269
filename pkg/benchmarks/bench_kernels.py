"""Time the pure-Python and compiled kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--graphs 300] [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import random
import time
from itertools import combinations

from tfik import kernels
from tfik.enumeration import MAX_DEG_5_TWO_DEG_5, Regime, enumerate_regime
from tfik.graph import SimpleGraph
from tfik.prover import pair_order


def workloads(count: int, seed: int) -> dict:
    rng = random.Random(seed)
    graphs = kernels.active.generate(0, [], 12, 22, 3, 5, True, 12, 0)[0]
    sample = [SimpleGraph(12, tuple(rows)) for rows, _ in rng.sample(graphs, min(count, len(graphs)))]
    dense = []
    for _ in range(count):
        n = rng.randint(8, 14)
        rows = [0] * n
        for u, v in combinations(range(n), 2):
            if rng.random() < 0.4:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        dense.append(SimpleGraph(n, tuple(rows)))
    return {"regime": sample, "dense": dense}


def bench(kern, data: dict) -> dict[str, float]:
    out = {}
    t = time.perf_counter()
    for g in data["regime"] + data["dense"]:
        kern.canon_form(g.order, g.rows)
    out["canon_form"] = time.perf_counter() - t

    t = time.perf_counter()
    for g in data["regime"] + data["dense"]:
        kern.is_planar(g.order, g.rows)
    out["is_planar"] = time.perf_counter() - t

    t = time.perf_counter()
    for g in data["regime"]:
        for a, b in combinations(range(g.order), 2):
            kern.reduce_pair(g.order, g.rows, a, b)
    out["reduce_pair (all pairs)"] = time.perf_counter() - t

    orders = [pair_order(g) for g in data["regime"]]
    t = time.perf_counter()
    for g, pairs in zip(data["regime"], orders):
        kern.first_planar_pair(g.order, g.rows, pairs)
    out["first_planar_pair"] = time.perf_counter() - t

    t = time.perf_counter()
    kern.generate(0, [], 11, 22, 3, 5, True, 11, 0)
    out["generate (order 11, 22 edges)"] = time.perf_counter() - t
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--graphs", type=int, default=300)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--skip-pipeline", action="store_true", help="omit the regime enumeration timing")
    p.add_argument("--json", help="write results here")
    args = p.parse_args()

    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . --no-build-isolation")
    data = workloads(args.graphs, args.seed)
    results: dict[str, dict[str, float]] = {}
    for name, kern in (("python", kernels.python_backend), ("compiled", kernels.compiled_backend)):
        runs = [bench(kern, data) for _ in range(args.repeat)]
        results[name] = {k: min(r[k] for r in runs) for k in runs[0]}

    if not args.skip_pipeline:
        for name in ("python", "compiled"):
            kernels.set_backend(name)
            t = time.perf_counter()
            enumerate_regime(Regime(22, profile=MAX_DEG_5_TWO_DEG_5, orders=(10, 11, 12)))
            results[name]["enumerate two-deg5, orders 10-12"] = time.perf_counter() - t

    width = max(len(k) for k in results["python"])
    print(f"{'workload':<{width}}  {'python s':>10}  {'compiled s':>10}  {'speedup':>8}")
    for k in results["python"]:
        py, c = results["python"][k], results["compiled"][k]
        print(f"{k:<{width}}  {py:10.4f}  {c:10.4f}  {py / c if c else float('inf'):7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=1)


if __name__ == "__main__":
    main()
