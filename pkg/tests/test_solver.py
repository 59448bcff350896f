import random

import pytest

import graphnim as gn
from graphnim.base import CapacityError, Verdict
from graphnim.topology import permute_weights


def test_solve_examples(solvers):
    assert solvers["H1"].solve((0, 0, 0, 0)) is Verdict.LOSING
    assert solvers["G4"].solve((2, 2, 3, 1)) is Verdict.LOSING
    assert solvers["H1"].solve((5, 1, 6, 11)) is Verdict.LOSING
    assert solvers["G1"].solve((1, 1, 1, 1)) is Verdict.WINNING


def test_optimal_move_examples(solvers):
    solver = solvers["H1"]
    move = solver.optimal_move((2, 3, 9, 4))
    assert move is not None
    assert solver.solve(gn.apply_move((2, 3, 9, 4), move)) is Verdict.LOSING
    assert solver.optimal_move((2, 1, 2, 1)) is None  # losing position
    assert solver.optimal_move((0, 0, 0, 0)) is None  # terminal


def test_optimal_move_is_first_in_enumeration_order(solvers):
    solver = solvers["H1"]
    weights = (2, 3, 9, 4)
    move = solver.optimal_move(weights)
    for candidate in gn.enumerate_moves(gn.catalog_graph("H1"), weights):
        successor = gn.apply_move(weights, candidate)
        if solver.solve(successor) is Verdict.LOSING:
            assert candidate == move
            break
        assert candidate != move


def _random_states(topology, count, max_weight, seed):
    rng = random.Random(seed)
    return [
        tuple(rng.randint(0, max_weight) for _ in topology.edges)
        for _ in range(count)
    ]


def test_retrograde_consistency_resample(solvers):
    # Re-derive each verdict from one ply of lookahead, per catalog graph.
    for gid in gn.CATALOG_IDS:
        topology = gn.catalog_graph(gid)
        solver = solvers[gid]
        for weights in _random_states(topology, 60, 5, seed=hash(gid) & 0xFFFF):
            outcome = solver.solve(weights)
            successors = [
                solver.solve(gn.apply_move(weights, m))
                for m in gn.enumerate_moves(topology, weights)
            ]
            if outcome is Verdict.WINNING:
                assert Verdict.LOSING in successors
            else:
                assert all(s is Verdict.WINNING for s in successors)


def test_automorphism_invariance(solvers):
    for gid in gn.CATALOG_IDS:
        topology = gn.catalog_graph(gid)
        solver = solvers[gid]
        perms = gn.automorphism_edge_perms(gid)
        for weights in _random_states(topology, 40, 5, seed=len(gid)):
            outcome = solver.solve(weights)
            for perm in perms:
                assert solver.solve(permute_weights(weights, perm)) is outcome


def test_nim_equivalence_on_i2(solvers):
    # Four disjoint edges play exactly like 4-pile Nim.
    solver = solvers["I2"]
    for a in range(9):
        for b in range(9):
            for c in range(9):
                for d in range(9):
                    losing = solver.solve((a, b, c, d)) is Verdict.LOSING
                    assert losing == gn.is_balanced((a, b, c, d))


def test_triangle_theorem(triangle_solver):
    for a in range(1, 11):
        for b in range(1, 11):
            for c in range(1, 11):
                losing = triangle_solver.solve((a, b, c)) is Verdict.LOSING
                assert losing == (a == b == c), (a, b, c)


@pytest.mark.skipif(not gn.HAVE_COMPILED_CORE, reason="compiled core not built")
def test_backends_agree():
    topologies = [gn.catalog_graph(gid) for gid in gn.CATALOG_IDS]
    topologies.append(gn.triangle_graph())
    for topology in topologies:
        compiled = gn.Solver(topology, backend="compiled")
        pure = gn.Solver(topology, backend="python")
        for weights in _random_states(topology, 120, 4, seed=7):
            assert compiled.solve(weights) == pure.solve(weights), (topology.id, weights)


def test_two_edge_path_matches_single_pile_nim():
    # A 2-path is one star: losing iff both weights are zero.
    topo = gn.custom_graph(("A", "B", "C"), (("A", "B"), ("B", "C")))
    backends = ["python"] + (["compiled"] if gn.HAVE_COMPILED_CORE else [])
    for backend in backends:
        solver = gn.Solver(topo, backend=backend)
        for a in range(13):
            for b in range(13):
                expected = Verdict.LOSING if a == b == 0 else Verdict.WINNING
                assert solver.solve((a, b)) is expected, (backend, a, b)


@pytest.mark.skipif(not gn.HAVE_COMPILED_CORE, reason="compiled core not built")
def test_backends_agree_on_random_custom_graphs():
    # Fuzz the kernel's generic incidence handling beyond the catalog.
    rng = random.Random(99)
    labels = "ABCDEFGH"
    for _ in range(25):
        n = rng.randint(2, 6)
        vertices = tuple(labels[:n])
        possible = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]
        edges = rng.sample(possible, rng.randint(1, min(6, len(possible))))
        topology = gn.custom_graph(vertices, edges)
        compiled = gn.Solver(topology, backend="compiled")
        pure = gn.Solver(topology, backend="python")
        for _ in range(40):
            weights = tuple(rng.randint(0, 3) for _ in edges)
            assert compiled.solve(weights) == pure.solve(weights), (edges, weights)


@pytest.mark.skipif(not gn.HAVE_COMPILED_CORE, reason="compiled core not built")
def test_compiled_table_regrowth_consistency():
    # Growing the dense table discards memo entries; results must not change.
    topology = gn.catalog_graph("H1")
    growing = gn.Solver(topology, backend="compiled")
    fresh = gn.Solver(topology, backend="compiled")
    fresh.solve((20, 6, 20, 8))
    probes = [(2, 1, 2, 1), (20, 3, 1, 7), (1, 6, 20, 8), (5, 1, 6, 11)]
    for weights in probes:
        assert growing.solve(weights) == fresh.solve(weights), weights


def test_capacity_errors():
    solver = gn.Solver(gn.catalog_graph("H1"), max_weight=64)
    with pytest.raises(CapacityError):
        solver.solve((65, 1, 1, 1))
    if gn.HAVE_COMPILED_CORE:
        tiny = gn.Solver(gn.catalog_graph("H1"), backend="compiled", table_budget=100)
        with pytest.raises(CapacityError):
            tiny.solve((12, 12, 12, 12))


def test_custom_graph_uses_identity_symmetry_only():
    # A relabeled "triangle plus edge" must not inherit catalog symmetries.
    topo = gn.custom_graph(("A", "B", "C", "D", "E"),
                           (("A", "B"), ("B", "C"), ("C", "A"), ("D", "E")))
    solver = gn.Solver(topo, backend="python")
    g4 = gn.Solver(gn.catalog_graph("G4"), backend="python")
    for weights in _random_states(topo, 40, 4, seed=3):
        assert solver.solve(weights) == g4.solve(weights)


def test_engine_move_policy(solvers):
    solver = solvers["H1"]
    # Winning position: engine plays a move whose successor is Losing.
    move = gn.engine_move(solver, (2, 3, 9, 4))
    assert solver.solve(gn.apply_move((2, 3, 9, 4), move)) is Verdict.LOSING
    # Losing position: plays the legal move minimizing successor total.
    move = gn.engine_move(solver, (2, 1, 2, 1))
    assert move.total == 3  # best removal at B or C empties two edges
    assert gn.engine_move(solver, (0, 0, 0, 0)) is None
