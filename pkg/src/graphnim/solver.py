"""Ground-truth oracle: memoized retrograde win/loss evaluation.

A position is Losing for the player to move iff every legal move leads to a
Winning successor (vacuously, the all-zero state is Losing); Winning iff
some move reaches a Losing successor. Two backends implement the search:

* ``compiled`` - the Cython kernel over a dense win/loss table indexed by
  the raw packed weight vector (selected by default when the extension
  built).
* ``python``   - dict-memoized search over canonical (automorphism-reduced)
  packed keys; always available.

Both are exact; the benchmark script under ``benchmarks/`` compares them.
"""

from __future__ import annotations

import numpy as np

from .base import CapacityError, GraphNimError, Verdict, MAX_EDGE_WEIGHT
from ._solver_py import PySolverBackend
from .topology import (
    CATALOG_IDS,
    GraphTopology,
    Move,
    Weights,
    apply_move,
    automorphism_edge_perms,
    catalog_graph,
    check_config,
    enumerate_moves,
)

try:
    from . import _solver_core

    HAVE_COMPILED_CORE = True
except ImportError:  # pragma: no cover - depends on the build environment
    _solver_core = None
    HAVE_COMPILED_CORE = False

# Dense-table entry budget for the compiled backend (int8 per state).
DEFAULT_TABLE_BUDGET = 1 << 25


class CompiledSolverBackend:
    """Dense win/loss table driven by the Cython kernel.

    The table covers the box [0, w_e] per edge and regrows (discarding
    solved entries) when a larger configuration arrives; sweeps should
    present their largest configuration first to avoid rebuilds.
    """

    name = "compiled"

    def __init__(self, topology: GraphTopology, table_budget: int = DEFAULT_TABLE_BUDGET):
        self.topology = topology
        self.table_budget = table_budget
        max_incident = _solver_core.max_incident_edges()
        vert_off = [0]
        vert_edge: list[int] = []
        for v in topology.vertices:
            inc = topology.incidence[v]
            if len(inc) > max_incident:
                raise CapacityError(
                    f"vertex {v!r} has {len(inc)} incident edges; kernel supports {max_incident}"
                )
            vert_edge.extend(inc)
            vert_off.append(len(vert_edge))
        self._vert_off = np.asarray(vert_off, dtype=np.int32)
        self._vert_edge = np.asarray(vert_edge, dtype=np.int32)
        self._dims: tuple[int, ...] | None = None
        self._dims_arr = None
        self._strides = None
        self._table = None
        self._frames = None
        self._frame_depth = 0

    def _ensure_table(self, weights: Weights) -> None:
        need = tuple(w + 1 for w in weights)
        if self._dims is not None and all(n <= d for n, d in zip(need, self._dims)):
            return
        dims = need if self._dims is None else tuple(
            max(n, d) for n, d in zip(need, self._dims)
        )
        total = 1
        for d in dims:
            total *= d
        if total > self.table_budget:
            raise CapacityError(
                f"{self.topology.id}: state table would need {total} entries "
                f"(budget {self.table_budget}); use the python backend or a larger budget"
            )
        strides = [0] * len(dims)
        acc = 1
        for i in range(len(dims) - 1, -1, -1):
            strides[i] = acc
            acc *= dims[i]
        self._dims = dims
        self._dims_arr = np.asarray(dims, dtype=np.int32)
        self._strides = np.asarray(strides, dtype=np.int64)
        self._table = np.zeros(total, dtype=np.int8)

    def _ensure_frames(self, depth: int) -> None:
        if depth <= self._frame_depth:
            return
        maxj = _solver_core.max_incident_edges()
        self._frames = (
            np.zeros(depth, dtype=np.int64),          # state index
            np.zeros(depth, dtype=np.int64),          # successor cursor
            np.zeros(depth, dtype=np.int32),          # vertex cursor
            np.zeros(depth, dtype=np.int32),          # incident count
            np.zeros(depth * maxj, dtype=np.int32),   # odometer
            np.zeros(depth * maxj, dtype=np.int32),   # current weights
        )
        self._frame_depth = depth

    def outcome(self, weights: Weights) -> bool:
        self._ensure_table(weights)
        idx = int(sum(w * s for w, s in zip(weights, self._strides.tolist())))
        if self._table[idx] == 0:
            self._ensure_frames(sum(weights) + 2)
            f_idx, f_succ, f_v, f_j, f_n, f_c = self._frames
            _solver_core.solve_dense(
                self._table, self._strides, self._dims_arr,
                self._vert_off, self._vert_edge, idx,
                f_idx, f_succ, f_v, f_j, f_n, f_c,
            )
        return bool(self._table[idx] == 1)


def _symmetry_group(topology: GraphTopology):
    """Catalog graphs get their hardcoded group; custom graphs identity only."""
    if topology.id in CATALOG_IDS and topology == catalog_graph(topology.id):
        return automorphism_edge_perms(topology.id)
    return (tuple(range(len(topology.edges))),)


class Solver:
    """Deterministic, observationally pure oracle for one topology."""

    def __init__(
        self,
        topology: GraphTopology,
        *,
        backend: str = "auto",
        max_weight: int = MAX_EDGE_WEIGHT,
        table_budget: int = DEFAULT_TABLE_BUDGET,
    ):
        self.topology = topology
        self.max_weight = max_weight
        if backend == "auto":
            backend = "compiled" if HAVE_COMPILED_CORE else "python"
        if backend == "compiled":
            if not HAVE_COMPILED_CORE:
                raise GraphNimError("compiled solver core is not built")
            self._backend = CompiledSolverBackend(topology, table_budget)
        elif backend == "python":
            self._backend = PySolverBackend(topology, _symmetry_group(topology))
        else:
            raise ValueError(f"unknown backend {backend!r}")

    @property
    def backend_name(self) -> str:
        return self._backend.name

    def _checked(self, weights) -> Weights:
        w = check_config(self.topology, weights)
        for name, x in zip(self.topology.edge_names, w):
            if x > self.max_weight:
                raise CapacityError(
                    f"weight {x} on {name} exceeds the solver bound {self.max_weight}"
                )
        return w

    def solve(self, weights) -> Verdict:
        w = self._checked(weights)
        return Verdict.WINNING if self._backend.outcome(w) else Verdict.LOSING

    def optimal_move(self, weights) -> Move | None:
        """First move (in enumeration order) whose successor is Losing, or
        None when the position itself is Losing or terminal."""
        w = self._checked(weights)
        if not self._backend.outcome(w):
            return None
        for move in enumerate_moves(self.topology, w):
            if not self._backend.outcome(apply_move(w, move)):
                return move
        raise AssertionError("winning position without a winning move")


def engine_move(solver: Solver, weights) -> Move | None:
    """Move the engine plays: the optimal move when the position is
    Winning, otherwise the legal move minimizing the successor's total
    weight (tie broken by enumeration order). None only on terminal
    states."""
    w = check_config(solver.topology, weights)
    if sum(w) == 0:
        return None
    move = solver.optimal_move(w)
    if move is not None:
        return move
    best: Move | None = None
    for candidate in enumerate_moves(solver.topology, w):
        if best is None or candidate.total > best.total:
            best = candidate
    return best


_shared: dict[GraphTopology, Solver] = {}


def shared_solver(topology: GraphTopology) -> Solver:
    """Default-configuration Solver shared per topology value."""
    solver = _shared.get(topology)
    if solver is None:
        solver = _shared[topology] = Solver(topology)
    return solver


def solve(topology: GraphTopology, weights) -> Verdict:
    return shared_solver(topology).solve(weights)


def optimal_move(topology: GraphTopology, weights) -> Move | None:
    return shared_solver(topology).optimal_move(weights)
