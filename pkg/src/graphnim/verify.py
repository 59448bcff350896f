"""Exhaustive oracle-vs-classifier verification with line-delimited reports.

Every positive configuration up to the weight bound (H1 additionally
includes w(EF) = 0) is classified by the closed-form rules and checked
against the retrograde solver. For graphs other than H1 an Unknown verdict
is itself a disagreement; for H1 the Unknown fraction is reported, not
bounded.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .base import Verdict
from .rules import classify
from .solver import Solver
from .topology import Weights, catalog_graph, weights_to_wire


@dataclass(frozen=True)
class Disagreement:
    weights: Weights
    classifier: Verdict
    rule: str
    oracle: Verdict


@dataclass
class VerificationReport:
    graph: str
    max_weight: int
    total: int = 0
    winning: int = 0
    losing: int = 0
    unknown: int = 0
    agreements: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    duration_ms: float = 0.0

    def summary(self) -> dict:
        return {
            "graph": self.graph,
            "max_weight": self.max_weight,
            "total": self.total,
            "winning": self.winning,
            "losing": self.losing,
            "unknown": self.unknown,
            "disagreements": len(self.disagreements),
            "duration_ms": round(self.duration_ms, 3),
        }


def iter_configs(graph_id: str, max_weight: int) -> Iterator[Weights]:
    """Row-major enumeration over edge indices; H1's EF edge starts at 0."""
    n_edges = len(catalog_graph(graph_id).edges)
    ranges = [range(1, max_weight + 1)] * n_edges
    if graph_id == "H1":
        ranges[-1] = range(0, max_weight + 1)
    return itertools.product(*ranges)


def verify_graph(
    graph_id: str,
    max_weight: int,
    *,
    jobs: int = 1,
    solver: Solver | None = None,
) -> VerificationReport:
    """Compare classify against solve for every configuration in the box."""
    topology = catalog_graph(graph_id)
    if solver is None:
        solver = Solver(topology)
    started = time.perf_counter()
    # Seed the memo at the sweep maximum so per-config solves are lookups
    # and the report is independent of worker scheduling.
    seed = tuple(max_weight for _ in topology.edges)
    solver.solve(seed)

    def check(weights: Weights):
        verdict = classify(graph_id, weights)
        oracle = solver.solve(weights)
        tolerated = graph_id == "H1" and verdict.verdict is Verdict.UNKNOWN
        bad = verdict.verdict is not oracle and not tolerated
        return weights, verdict, oracle, bad

    configs = list(iter_configs(graph_id, max_weight))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, configs, chunksize=1024))
    else:
        results = [check(w) for w in configs]

    report = VerificationReport(graph_id, max_weight)
    for weights, verdict, oracle, bad in results:
        report.total += 1
        if verdict.verdict is Verdict.WINNING:
            report.winning += 1
        elif verdict.verdict is Verdict.LOSING:
            report.losing += 1
        else:
            report.unknown += 1
        if bad:
            report.disagreements.append(
                Disagreement(weights, verdict.verdict, verdict.rule, oracle)
            )
        else:
            report.agreements += 1
    report.duration_ms = (time.perf_counter() - started) * 1000.0
    return report


def emit_report(report: VerificationReport, path) -> None:
    """One summary object, then one line per disagreement."""
    topology = catalog_graph(report.graph)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(report.summary(), sort_keys=True) + "\n")
        for d in report.disagreements:
            fh.write(json.dumps({
                "weights": weights_to_wire(topology, d.weights),
                "classifier": str(d.classifier),
                "rule": d.rule,
                "oracle": str(d.oracle),
            }, sort_keys=True) + "\n")


def parse_report(path) -> tuple[dict, list[dict]]:
    """Round-trip: reconstruct the summary and the disagreement lines."""
    with open(path, encoding="utf-8") as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"{path}: empty report")
    return lines[0], lines[1:]
