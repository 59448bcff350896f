"""Graph topologies, weight configurations, legal moves and symmetries.

The eleven 4-edge catalog graphs carry the vertex labels and the edge order
used throughout the package (weight vectors always index against the listed
edge order). Automorphism groups are hardcoded as vertex-map generators per
catalog graph and closed under composition at import; custom graphs get the
identity group only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .base import (
    MAX_EDGE_WEIGHT,
    CatalogError,
    IllegalMoveError,
    InvalidConfigError,
)

Weights = tuple[int, ...]
EdgePerm = tuple[int, ...]


@dataclass(frozen=True)
class GraphTopology:
    """Labeled vertices plus an ordered edge list.

    ``incidence`` maps each vertex to the indices of its incident edges,
    in edge order.
    """

    id: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    incidence: Mapping[str, tuple[int, ...]] = field(init=False, compare=False, hash=False)

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise InvalidConfigError(f"duplicate vertex labels in {self.vertices}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidConfigError(f"self-loop {u!r}-{v!r} not allowed")
            if u not in vertex_set or v not in vertex_set:
                raise InvalidConfigError(f"edge ({u!r},{v!r}) uses an unlisted vertex")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidConfigError(f"duplicate edge ({u!r},{v!r})")
            seen.add(key)
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        object.__setattr__(self, "incidence", {v: tuple(e) for v, e in inc.items()})

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(u + v for u, v in self.edges)

    def edge_index(self, name: str) -> int:
        try:
            return self.edge_names.index(name)
        except ValueError:
            raise InvalidConfigError(f"{self.id}: unknown edge name {name!r}") from None


@dataclass
class Move:
    """A vertex plus per-incident-edge removal amounts (edge index -> amount).

    Only strictly positive removals are kept; the total must be >= 1.
    """

    vertex: str
    removals: dict[int, int]

    def __post_init__(self):
        self.removals = {e: r for e, r in self.removals.items() if r != 0}

    @property
    def total(self) -> int:
        return sum(self.removals.values())


# --- catalog -----------------------------------------------------------

_CATALOG_EDGES: dict[str, tuple[tuple[str, str], ...]] = {
    "F1": (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")),
    "F2": (("A", "B"), ("B", "C"), ("C", "D"), ("D", "B")),
    "G1": (("A", "B"), ("A", "C"), ("A", "D"), ("A", "E")),
    "G2": (("A", "B"), ("B", "E"), ("A", "C"), ("A", "D")),
    "G3": (("A", "B"), ("B", "C"), ("C", "D"), ("D", "E")),
    "G4": (("A", "B"), ("B", "C"), ("C", "A"), ("D", "E")),
    "H1": (("A", "B"), ("B", "C"), ("C", "D"), ("E", "F")),
    "H2": (("A", "B"), ("B", "C"), ("D", "E"), ("E", "F")),
    "H3": (("A", "B"), ("A", "C"), ("A", "D"), ("E", "F")),
    "I1": (("A", "B"), ("B", "C"), ("D", "E"), ("F", "G")),
    "I2": (("A", "B"), ("C", "D"), ("E", "F"), ("G", "H")),
}

CATALOG_IDS: tuple[str, ...] = tuple(_CATALOG_EDGES)

# Automorphism generators, written as vertex bijections (only the moved
# vertices are listed). Deriving edge permutations from vertex maps keeps
# the "permutation preserves the edge list" invariant true by construction.
_AUTOMORPHISM_GENERATORS: dict[str, tuple[dict[str, str], ...]] = {
    "F1": (
        {"A": "B", "B": "C", "C": "D", "D": "A"},  # rotation
        {"A": "B", "B": "A", "C": "D", "D": "C"},  # reflection: BC <-> DA
    ),
    "F2": ({"C": "D", "D": "C"},),
    "G1": (
        {"B": "C", "C": "B"},
        {"C": "D", "D": "C"},
        {"D": "E", "E": "D"},
    ),
    "G2": ({"C": "D", "D": "C"},),
    "G3": ({"A": "E", "E": "A", "B": "D", "D": "B"},),
    "G4": (
        {"A": "B", "B": "A"},
        {"B": "C", "C": "B"},
    ),
    "H1": ({"A": "D", "D": "A", "B": "C", "C": "B"},),
    "H2": (
        {"A": "C", "C": "A"},
        {"D": "F", "F": "D"},
        {"A": "D", "D": "A", "B": "E", "E": "B", "C": "F", "F": "C"},
    ),
    "H3": (
        {"B": "C", "C": "B"},
        {"C": "D", "D": "C"},
    ),
    "I1": (
        {"A": "C", "C": "A"},
        {"D": "F", "F": "D", "E": "G", "G": "E"},
    ),
    "I2": (
        {"A": "C", "C": "A", "B": "D", "D": "B"},
        {"C": "E", "E": "C", "D": "F", "F": "D"},
        {"E": "G", "G": "E", "F": "H", "H": "F"},
    ),
}


def _vertices_from_edges(edges: Iterable[tuple[str, str]]) -> tuple[str, ...]:
    seen: list[str] = []
    for u, v in edges:
        for x in (u, v):
            if x not in seen:
                seen.append(x)
    return tuple(seen)


def catalog_graph(graph_id: str) -> GraphTopology:
    """Return the catalog topology with the authoritative edge order."""
    edges = _CATALOG_EDGES.get(graph_id)
    if edges is None:
        raise CatalogError(
            f"unknown catalog graph {graph_id!r}; expected one of {', '.join(CATALOG_IDS)}"
        )
    return GraphTopology(graph_id, _vertices_from_edges(edges), edges)


def custom_graph(vertices: Sequence[str], edges: Sequence[tuple[str, str]]) -> GraphTopology:
    """Build a user-supplied small graph (identity symmetry group only)."""
    return GraphTopology("custom", tuple(vertices), tuple((u, v) for u, v in edges))


def triangle_graph() -> GraphTopology:
    """The 3-edge triangle used by the triangle theorem tests."""
    return custom_graph(("A", "B", "C"), (("A", "B"), ("B", "C"), ("C", "A")))


# --- automorphisms -----------------------------------------------------


def _edge_perm_from_vertex_map(topology: GraphTopology, vmap: dict[str, str]) -> EdgePerm:
    lookup = {frozenset(e): i for i, e in enumerate(topology.edges)}
    perm = []
    for u, v in topology.edges:
        image = frozenset((vmap.get(u, u), vmap.get(v, v)))
        if image not in lookup:
            raise CatalogError(f"{topology.id}: vertex map {vmap} does not preserve edges")
        perm.append(lookup[image])
    if sorted(perm) != list(range(len(topology.edges))):
        raise CatalogError(f"{topology.id}: vertex map {vmap} is not an edge bijection")
    return tuple(perm)


def _close_under_composition(perms: set[EdgePerm], n_edges: int) -> tuple[EdgePerm, ...]:
    group = set(perms)
    group.add(tuple(range(n_edges)))
    frontier = list(group)
    while frontier:
        p = frontier.pop()
        for q in list(group):
            for comp in (tuple(p[q[i]] for i in range(n_edges)),
                         tuple(q[p[i]] for i in range(n_edges))):
                if comp not in group:
                    group.add(comp)
                    frontier.append(comp)
    return tuple(sorted(group))


def _build_groups() -> dict[str, tuple[EdgePerm, ...]]:
    groups = {}
    for gid in CATALOG_IDS:
        topo = catalog_graph(gid)
        gens = {
            _edge_perm_from_vertex_map(topo, vmap)
            for vmap in _AUTOMORPHISM_GENERATORS[gid]
        }
        groups[gid] = _close_under_composition(gens, len(topo.edges))
    return groups


_EDGE_PERM_GROUPS: dict[str, tuple[EdgePerm, ...]] = _build_groups()


def automorphism_edge_perms(graph_id: str) -> tuple[EdgePerm, ...]:
    """Full edge-permutation group of the catalog graph's automorphisms."""
    if graph_id not in _EDGE_PERM_GROUPS:
        raise CatalogError(f"unknown catalog graph {graph_id!r}")
    return _EDGE_PERM_GROUPS[graph_id]


def permute_weights(weights: Weights, perm: EdgePerm) -> Weights:
    """Weights of the configuration relabeled by an edge permutation."""
    return tuple(weights[perm[i]] for i in range(len(perm)))


def canonicalize(graph_id: str, weights: Weights) -> Weights:
    """Lexicographically least weight vector over the automorphism orbit."""
    return min(permute_weights(weights, p) for p in automorphism_edge_perms(graph_id))


# --- configurations and moves -----------------------------------------


def check_config(topology: GraphTopology, weights: Sequence[int], *, positive: bool = False) -> Weights:
    """Validate a weight vector against the topology and return it as a tuple.

    ``positive`` additionally requires every weight >= 1 (the paper's
    standing assumption for initial configurations).
    """
    w = tuple(weights)
    if len(w) != len(topology.edges):
        raise InvalidConfigError(
            f"{topology.id}: expected {len(topology.edges)} weights, got {len(w)}"
        )
    for name, x in zip(topology.edge_names, w):
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidConfigError(f"{topology.id}: weight of {name} is not an integer")
        if x < 0:
            raise InvalidConfigError(f"{topology.id}: negative weight on {name}")
        if x > MAX_EDGE_WEIGHT:
            raise InvalidConfigError(
                f"{topology.id}: weight {x} on {name} exceeds cap {MAX_EDGE_WEIGHT}"
            )
        if positive and x == 0:
            raise InvalidConfigError(f"{topology.id}: weight on {name} must be >= 1")
    return w


def weights_from_wire(topology: GraphTopology, mapping: Mapping[str, int]) -> Weights:
    """Decode the wire form ``{"AB": 2, ...}`` into an ordered weight tuple."""
    names = topology.edge_names
    unknown = set(mapping) - set(names)
    if unknown:
        raise InvalidConfigError(f"{topology.id}: unknown edge names {sorted(unknown)}")
    missing = [n for n in names if n not in mapping]
    if missing:
        raise InvalidConfigError(f"{topology.id}: missing weights for {missing}")
    return check_config(topology, [mapping[n] for n in names])


def weights_to_wire(topology: GraphTopology, weights: Weights) -> dict[str, int]:
    return dict(zip(topology.edge_names, weights))


def enumerate_moves(topology: GraphTopology, weights: Weights) -> list[Move]:
    """All legal moves, ordered by vertex then lexicographic removal vector."""
    check_config(topology, weights)
    moves: list[Move] = []
    for v in topology.vertices:
        edges = topology.incidence[v]
        ranges = [range(weights[e] + 1) for e in edges]
        for removal in itertools.product(*ranges):
            if sum(removal) == 0:
                continue
            moves.append(Move(v, dict(zip(edges, removal))))
    return moves


def count_moves(topology: GraphTopology, weights: Weights) -> int:
    """Closed-form move count: sum over v of (prod (w_e + 1) - 1)."""
    total = 0
    for v in topology.vertices:
        prod = 1
        for e in topology.incidence[v]:
            prod *= weights[e] + 1
        total += prod - 1
    return total


def validate_move(topology: GraphTopology, weights: Weights, move: Move) -> None:
    """Raise IllegalMoveError unless the move is legal on this configuration."""
    if move.vertex not in topology.incidence:
        raise IllegalMoveError(f"unknown vertex {move.vertex!r}")
    incident = set(topology.incidence[move.vertex])
    for e, r in move.removals.items():
        if e not in incident:
            raise IllegalMoveError(
                f"edge {topology.edge_names[e] if 0 <= e < len(weights) else e} "
                f"is not incident on vertex {move.vertex!r}"
            )
        if r < 0:
            raise IllegalMoveError("negative removal amount")
        if r > weights[e]:
            raise IllegalMoveError(
                f"removal {r} exceeds weight {weights[e]} on edge {topology.edge_names[e]}"
            )
    if move.total < 1:
        raise IllegalMoveError("total removal must be strictly positive")


def apply_move(weights: Weights, move: Move) -> Weights:
    """New configuration with the move's removals subtracted."""
    if move.total < 1:
        raise IllegalMoveError("total removal must be strictly positive")
    out = list(weights)
    for e, r in move.removals.items():
        if not 0 <= e < len(out):
            raise IllegalMoveError(f"edge index {e} out of range")
        if r < 0 or r > out[e]:
            raise IllegalMoveError(f"removal {r} exceeds weight {out[e]} on edge {e}")
        out[e] -= r
    return tuple(out)


def move_from_wire(topology: GraphTopology, payload: Mapping) -> Move:
    """Decode ``{"vertex": "C", "removals": {"BC": 1, ...}}``."""
    vertex = payload.get("vertex")
    removals = payload.get("removals")
    if not isinstance(vertex, str) or not isinstance(removals, Mapping):
        raise IllegalMoveError("move must have a vertex and a removals mapping")
    decoded = {}
    for name, amount in removals.items():
        if not isinstance(amount, int) or isinstance(amount, bool) or amount < 0:
            raise IllegalMoveError(f"removal for {name!r} must be a non-negative integer")
        try:
            decoded[topology.edge_index(name)] = amount
        except InvalidConfigError as exc:
            raise IllegalMoveError(str(exc)) from None
    return Move(vertex, decoded)


def move_to_wire(topology: GraphTopology, move: Move) -> dict:
    return {
        "vertex": move.vertex,
        "removals": {topology.edge_names[e]: r for e, r in sorted(move.removals.items())},
    }
