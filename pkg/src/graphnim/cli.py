"""Command-line entry point.

Subcommands: solve and classify single positions, run the exhaustive
verification harness, play a text-mode game against the engine, launch the
HTTP service, and list the catalog. Exit codes: 0 success, 1 usage error,
2 verification found disagreements, 3 internal rule contradiction.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .base import ContradictionError, GraphNimError, Verdict
from .rules import classify
from .solver import Solver, engine_move
from .topology import (
    CATALOG_IDS,
    GraphTopology,
    Move,
    Weights,
    apply_move,
    catalog_graph,
    move_to_wire,
    validate_move,
    weights_from_wire,
)
from .verify import emit_report, verify_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_CONTRADICTION = 3


def parse_weights_arg(topology: GraphTopology, text: str) -> Weights:
    """Parse the --weights flag, e.g. "AB=5,BC=1,CD=6,EF=11"."""
    mapping: dict[str, int] = {}
    for part in text.split(","):
        name, eq, value = part.strip().partition("=")
        if not eq or not value.lstrip("-").isdigit():
            raise GraphNimError(f"bad weight assignment {part.strip()!r}; expected EDGE=INT")
        mapping[name] = int(value)
    return weights_from_wire(topology, mapping)


def _format_trace(trace) -> str:
    if trace is None:
        return ""
    if dataclasses.is_dataclass(trace):
        pairs = dataclasses.asdict(trace)
    elif isinstance(trace, dict):
        pairs = trace
    else:
        return str(trace)
    return ", ".join(f"{k}={sorted(v) if isinstance(v, frozenset) else v}"
                     for k, v in pairs.items() if v is not None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphnim",
        description="Game of Graph Nim: solver, classifiers, verification, play",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_position_flags(p):
        p.add_argument("--graph", required=True, help="catalog graph id (see `catalog`)")
        p.add_argument("--weights", required=True, help="comma list of EDGE=INT, e.g. AB=2,BC=1,CD=2,EF=1")

    p = sub.add_parser("solve", help="oracle verdict for one position")
    add_position_flags(p)

    p = sub.add_parser("classify", help="closed-form verdict for one position")
    add_position_flags(p)
    p.add_argument("--trace", action="store_true", help="print the rule's parameter witness")

    p = sub.add_parser("verify", help="exhaustive classifier-vs-oracle check")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--report", help="write a line-delimited report to this path")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("play", help="text-mode game against the engine")
    add_position_flags(p)
    p.add_argument("--human-first", action="store_true")

    p = sub.add_parser("serve", help="launch the HTTP analysis/play service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", help="directory of UI files served at /")

    sub.add_parser("catalog", help="list the catalog graphs and their edges")
    return parser


def cmd_solve(args) -> int:
    topology = catalog_graph(args.graph)
    weights = parse_weights_arg(topology, args.weights)
    solver = Solver(topology)
    verdict = solver.solve(weights)
    print(f"{args.graph} {args.weights}: {verdict}")
    if verdict is Verdict.WINNING:
        move = solver.optimal_move(weights)
        print(f"optimal move: {move_to_wire(topology, move)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    topology = catalog_graph(args.graph)
    weights = parse_weights_arg(topology, args.weights)
    result = classify(args.graph, weights)
    print(f"{args.graph} {args.weights}: {result.verdict} (rule {result.rule})")
    if args.trace and result.trace is not None:
        print(f"trace: {_format_trace(result.trace)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    catalog_graph(args.graph)  # fail fast on unknown ids
    report = verify_graph(args.graph, args.max_weight, jobs=args.jobs)
    summary = report.summary()
    print(" ".join(f"{k}={v}" for k, v in summary.items()))
    if args.report:
        emit_report(report, args.report)
        print(f"report written to {args.report}")
    for d in report.disagreements[:20]:
        print(f"disagreement: {d.weights} classifier={d.classifier}/{d.rule} oracle={d.oracle}")
    return EXIT_DISAGREEMENT if report.disagreements else EXIT_OK


def cmd_catalog(args) -> int:
    for gid in CATALOG_IDS:
        topology = catalog_graph(gid)
        edges = ",".join(topology.edge_names)
        print(f"{gid}: vertices={''.join(topology.vertices)} edges={edges}")
    return EXIT_OK


def _prompt_move(topology: GraphTopology, weights: Weights) -> Move:
    while True:
        vertex = input("choose vertex: ").strip()
        if vertex not in topology.incidence:
            print(f"unknown vertex {vertex!r}; options: {', '.join(topology.vertices)}")
            continue
        incident = [e for e in topology.incidence[vertex]]
        removals = {}
        for e in incident:
            name = topology.edge_names[e]
            raw = input(f"remove from {name} (0..{weights[e]}): ").strip() or "0"
            if not raw.isdigit():
                print("removal must be a non-negative integer; restarting move")
                removals = None
                break
            removals[e] = int(raw)
        if removals is None:
            continue
        move = Move(vertex, removals)
        try:
            validate_move(topology, weights, move)
        except GraphNimError as exc:
            print(f"illegal move: {exc}; try again")
            continue
        return move


def cmd_play(args) -> int:
    topology = catalog_graph(args.graph)
    weights = parse_weights_arg(topology, args.weights)
    solver = Solver(topology)
    human_turn = args.human_first

    def show():
        board = "  ".join(f"{n}={w}" for n, w in zip(topology.edge_names, weights))
        print(f"[{args.graph}] {board}")

    show()
    print(f"position is {solver.solve(weights)} for the player to move")
    while sum(weights) > 0:
        if human_turn:
            try:
                move = _prompt_move(topology, weights)
            except EOFError:
                print("\ninput closed; game abandoned")
                return EXIT_OK
            weights = apply_move(weights, move)
            mover = "you"
        else:
            move = engine_move(solver, weights)
            weights = apply_move(weights, move)
            print(f"engine plays {move_to_wire(topology, move)}")
            mover = "engine"
        show()
        if sum(weights) == 0:
            print(f"game over: {'you win' if mover == 'you' else 'engine wins'} (last round)")
            return EXIT_OK
        human_turn = not human_turn
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = int(os.environ.get("GRAPHNIM_PORT", args.port))
    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "play": cmd_play,
    "serve": cmd_serve,
    "catalog": cmd_catalog,
}


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except GraphNimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
