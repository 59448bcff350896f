#!/usr/bin/env python3
"""Benchmark: compiled solver kernel vs pure-Python fallback.

Solves every initial configuration in an exhaustive box per graph, timing
one full sweep for each backend with a cold memo, and prints the speedup.

Usage: python benchmarks/benchmark_solver.py [--max-weight N] [--graphs G4,H1]
"""

import argparse
import itertools
import time

import graphnim as gn


def sweep(graph_id: str, max_weight: int, backend: str) -> tuple[float, int]:
    topology = gn.catalog_graph(graph_id)
    solver = gn.Solver(topology, backend=backend)
    configs = list(itertools.product(range(1, max_weight + 1),
                                     repeat=len(topology.edges)))
    started = time.perf_counter()
    solver.solve((max_weight,) * len(topology.edges))  # seed at the maximum
    losing = sum(1 for w in configs if solver.solve(w) is gn.Verdict.LOSING)
    return time.perf_counter() - started, losing


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=8)
    parser.add_argument("--graphs", default="G4,H1,F1,I2")
    args = parser.parse_args()

    backends = ["python"]
    if gn.HAVE_COMPILED_CORE:
        backends.insert(0, "compiled")
    else:
        print("note: compiled core not built; benchmarking python backend only")

    print(f"{'graph':<6} {'backend':<9} {'sweep':>9} {'configs/s':>11} {'losing':>7}")
    for gid in args.graphs.split(","):
        gid = gid.strip()
        n_configs = args.max_weight ** len(gn.catalog_graph(gid).edges)
        timings = {}
        losing_counts = set()
        for backend in backends:
            seconds, losing = sweep(gid, args.max_weight, backend)
            timings[backend] = seconds
            losing_counts.add(losing)
            print(f"{gid:<6} {backend:<9} {seconds:>8.3f}s {n_configs / seconds:>11.0f} {losing:>7}")
        if len(losing_counts) != 1:
            raise SystemExit(f"{gid}: backends disagree on losing counts {losing_counts}")
        if len(timings) == 2:
            print(f"{gid:<6} speedup   {timings['python'] / timings['compiled']:>8.1f}x")


if __name__ == "__main__":
    main()
