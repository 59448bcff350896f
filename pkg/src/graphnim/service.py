"""HTTP facade over the solver and classifiers for the interactive UI.

Endpoints (all bodies in the config wire form):
  GET  /api/graphs                  catalog with vertices and edge names
  POST /api/analyze                 oracle + classifier + optimal move
  POST /api/session                 new play session (engine may move first)
  GET  /api/session/{id}            current session state
  POST /api/session/{id}/move       apply a human move, engine replies
  POST /api/session/{id}/whatif     analysis of a hypothetical move

Sessions are in-memory with a bounded count and idle eviction; each
session serializes its own mutations. Every payload carries both the
oracle verdict and the classifier rule so the UI can show "theorem"
versus "search" provenance.
"""

from __future__ import annotations

import dataclasses
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .base import (
    ContradictionError,
    GraphNimError,
    IllegalMoveError,
    InvalidConfigError,
    UnsupportedGraphError,
    Verdict,
)
from .rules import classify
from .solver import Solver, engine_move, shared_solver
from .topology import (
    CATALOG_IDS,
    GraphTopology,
    Move,
    Weights,
    apply_move,
    catalog_graph,
    move_from_wire,
    move_to_wire,
    validate_move,
    weights_from_wire,
    weights_to_wire,
)

SESSION_LIMIT = 256
SESSION_IDLE_SECONDS = 3600.0


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _trace_to_wire(trace):
    if trace is None:
        return None
    if dataclasses.is_dataclass(trace):
        trace = dataclasses.asdict(trace)
    if isinstance(trace, dict):
        return {
            k: sorted(v) if isinstance(v, (set, frozenset)) else v
            for k, v in trace.items()
            if v is not None
        }
    return str(trace)


@dataclass
class PlaySession:
    id: str
    topology: GraphTopology
    initial_weights: Weights
    weights: Weights
    turn: str  # "human" | "engine"
    history: list[dict] = field(default_factory=list)
    game_over: bool = False
    winner: str | None = None
    last_used: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def record(self, by: str, move: Move) -> None:
        self.history.append({"by": by, "move": move_to_wire(self.topology, move)})

    def apply(self, by: str, move: Move) -> None:
        validate_move(self.topology, self.weights, move)
        self.weights = apply_move(self.weights, move)
        self.record(by, move)
        if sum(self.weights) == 0:
            self.game_over = True
            self.winner = by  # player of the last round wins
        else:
            self.turn = "engine" if by == "human" else "human"


class SessionStore:
    def __init__(self, limit: int = SESSION_LIMIT, idle_seconds: float = SESSION_IDLE_SECONDS):
        self._sessions: dict[str, PlaySession] = {}
        self._limit = limit
        self._idle = idle_seconds
        self._lock = threading.Lock()

    def _evict(self) -> None:
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items() if now - s.last_used > self._idle]
        for sid in stale:
            del self._sessions[sid]
        while len(self._sessions) >= self._limit:
            oldest = min(self._sessions.values(), key=lambda s: s.last_used)
            del self._sessions[oldest.id]

    def create(self, topology: GraphTopology, weights: Weights, first: str) -> PlaySession:
        with self._lock:
            self._evict()
            session = PlaySession(
                id=uuid.uuid4().hex[:12],
                topology=topology,
                initial_weights=weights,
                weights=weights,
                turn=first,
            )
            self._sessions[session.id] = session
            return session

    def get(self, session_id: str) -> PlaySession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown_session", f"no session {session_id!r}")
            session.last_used = time.monotonic()
            return session


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="graphnim", docs_url=None, redoc_url=None)
    store = SessionStore()

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.code, "message": exc.message},
        )

    async def read_json(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "malformed_json", "request body is not valid JSON")
        if not isinstance(body, dict):
            raise ApiError(400, "malformed_request", "request body must be a JSON object")
        return body

    def resolve_graph(body: dict) -> GraphTopology:
        graph_id = body.get("graph")
        if not isinstance(graph_id, str):
            raise ApiError(400, "malformed_request", "missing string field 'graph'")
        if graph_id not in CATALOG_IDS:
            raise ApiError(422, "unknown_graph", f"unknown catalog graph {graph_id!r}")
        return catalog_graph(graph_id)

    def resolve_weights(topology: GraphTopology, body: dict, *, positive: bool) -> Weights:
        raw = body.get("weights")
        if not isinstance(raw, dict):
            raise ApiError(400, "malformed_request", "missing object field 'weights'")
        try:
            weights = weights_from_wire(topology, raw)
        except InvalidConfigError as exc:
            raise ApiError(422, "invalid_weights", str(exc))
        if positive and any(w < 1 for w in weights):
            raise ApiError(422, "invalid_weights", "all initial weights must be >= 1")
        return weights

    def resolve_move(topology: GraphTopology, body: dict, weights: Weights) -> Move:
        try:
            move = move_from_wire(topology, body)
            validate_move(topology, weights, move)
        except IllegalMoveError as exc:
            raise ApiError(422, "illegal_move", str(exc))
        return move

    def analysis_payload(topology: GraphTopology, weights: Weights, solver: Solver) -> dict:
        oracle = solver.solve(weights)
        payload = {
            "graph": topology.id,
            "weights": weights_to_wire(topology, weights),
            "oracle": str(oracle),
            "optimal_move": None,
        }
        move = solver.optimal_move(weights)
        if move is not None:
            payload["optimal_move"] = move_to_wire(topology, move)
        try:
            # H1 accepts EF = 0; other classifiers need strictly positive
            # weights. Mid-game positions with zeroed edges fall back to
            # search-only analysis.
            result = classify(topology.id, weights)
            payload["classifier"] = {
                "verdict": str(result.verdict),
                "rule": result.rule,
                "trace": _trace_to_wire(result.trace),
            }
        except (InvalidConfigError, UnsupportedGraphError):
            payload["classifier"] = None
        except ContradictionError as exc:
            raise ApiError(500, "rule_contradiction", str(exc))
        return payload

    def session_payload(session: PlaySession, solver: Solver, engine_reply: Move | None = None) -> dict:
        return {
            "session": session.id,
            "graph": session.topology.id,
            "weights": weights_to_wire(session.topology, session.weights),
            "turn": session.turn,
            "game_over": session.game_over,
            "winner": session.winner,
            "history": list(session.history),
            "engine_move": (
                move_to_wire(session.topology, engine_reply) if engine_reply else None
            ),
            "analysis": analysis_payload(session.topology, session.weights, solver),
        }

    @app.get("/api/graphs")
    def graphs():
        out = []
        for gid in CATALOG_IDS:
            topology = catalog_graph(gid)
            out.append({
                "id": gid,
                "vertices": list(topology.vertices),
                "edges": [
                    {"name": name, "u": u, "v": v}
                    for name, (u, v) in zip(topology.edge_names, topology.edges)
                ],
            })
        return out

    @app.post("/api/analyze")
    async def analyze(request: Request):
        body = await read_json(request)
        topology = resolve_graph(body)
        weights = resolve_weights(topology, body, positive=False)
        return analysis_payload(topology, weights, shared_solver(topology))

    @app.post("/api/session")
    async def new_session(request: Request):
        body = await read_json(request)
        topology = resolve_graph(body)
        weights = resolve_weights(topology, body, positive=True)
        first = body.get("first", "human")
        if first not in ("human", "engine"):
            raise ApiError(400, "malformed_request", "field 'first' must be 'human' or 'engine'")
        solver = shared_solver(topology)
        session = store.create(topology, weights, first)
        reply = None
        with session.lock:
            if session.turn == "engine":
                reply = engine_move(solver, session.weights)
                session.apply("engine", reply)
            return session_payload(session, solver, reply)

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session_payload(session, shared_solver(session.topology))

    @app.post("/api/session/{session_id}/move")
    async def play_move(session_id: str, request: Request):
        body = await read_json(request)
        session = store.get(session_id)
        solver = shared_solver(session.topology)
        with session.lock:
            if session.game_over:
                raise ApiError(409, "game_over", "the game is already over")
            if session.turn != "human":
                raise ApiError(409, "not_your_turn", "it is the engine's turn")
            move = resolve_move(session.topology, body, session.weights)
            session.apply("human", move)
            reply = None
            if not session.game_over:
                reply = engine_move(solver, session.weights)
                session.apply("engine", reply)
            return session_payload(session, solver, reply)

    @app.post("/api/session/{session_id}/whatif")
    async def whatif(session_id: str, request: Request):
        body = await read_json(request)
        session = store.get(session_id)
        solver = shared_solver(session.topology)
        with session.lock:
            if session.game_over:
                raise ApiError(409, "game_over", "the game is already over")
            move = resolve_move(session.topology, body, session.weights)
            successor = apply_move(session.weights, move)
        return analysis_payload(session.topology, successor, solver)

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index():
            return {"service": "graphnim", "endpoints": ["/api/graphs", "/api/analyze"]}

    return app
