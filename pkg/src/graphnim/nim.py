"""Nim-sum arithmetic, galaxy-graph detection, and the galaxy classifier.

A galaxy graph (disjoint union of stars) reduces to ordinary Nim: each star
becomes one pile holding the sum of its ray weights. A position is losing
exactly when the pile tuple is balanced, i.e. has zero xor-sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .base import Classification, DispatchError, NotGalaxyError, Verdict
from .topology import GraphTopology, Weights, check_config

NimTuple = tuple[int, ...]

# Theorem item per galaxy catalog graph, in the numbering of the
# all-galaxy-graphs result (G1 is item 1, ... I2 is item 5).
GALAXY_IDS: dict[str, int] = {"G1": 1, "H2": 2, "H3": 3, "I1": 4, "I2": 5}


def nim_sum(piles: Sequence[int]) -> int:
    """Bitwise xor of all piles."""
    return reduce(lambda a, b: a ^ b, piles, 0)


def is_balanced(piles: Sequence[int]) -> bool:
    """True iff every base-2 digit column sums even (zero nim-sum)."""
    return nim_sum(piles) == 0


def f_exp(k: int) -> int:
    """The unique exponent with 2**f(k) <= k < 2**(f(k)+1)."""
    if k < 1:
        raise ValueError(f"f(k) requires k >= 1, got {k}")
    return k.bit_length() - 1


@dataclass(frozen=True)
class StarDecomposition:
    """Star components (centre, edge indices) plus their weight sums."""

    components: tuple[tuple[str, tuple[int, ...]], ...]
    pile_sums: NimTuple


def galaxy_decompose(topology: GraphTopology, weights: Weights) -> StarDecomposition:
    """Decompose a galaxy graph into stars and per-star pile sums.

    Decomposition is structural: weight-0 edges still belong to their
    component. Raises NotGalaxyError when some connected component of the
    edge set is not a star.
    """
    check_config(topology, weights)
    n = len(topology.edges)
    # Union edges sharing a vertex into connected components.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for edge_indices in topology.incidence.values():
        for other in edge_indices[1:]:
            parent[find(edge_indices[0])] = find(other)

    groups: dict[int, list[int]] = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)

    components = []
    for edges in sorted(groups.values(), key=lambda g: g[0]):
        endpoint_sets = [set(topology.edges[e]) for e in edges]
        common = set.intersection(*endpoint_sets)
        if not common:
            bad = ", ".join(topology.edge_names[e] for e in edges)
            raise NotGalaxyError(
                f"{topology.id}: component {{{bad}}} is not a star graph"
            )
        # A single edge is a star with either endpoint as centre; pick the
        # first listed one for determinism.
        if len(edges) == 1:
            centre = topology.edges[edges[0]][0]
        else:
            centre = min(common)
        components.append((centre, tuple(edges)))

    piles = tuple(sum(weights[e] for e in edges) for _, edges in components)
    return StarDecomposition(tuple(components), piles)


def classify_nim(piles: Sequence[int]) -> Classification:
    """Classify a plain Nim position: losing iff balanced."""
    verdict = Verdict.LOSING if is_balanced(piles) else Verdict.WINNING
    return Classification(verdict, "nim-balanced", {"piles": tuple(piles)})


def classify_galaxy(graph_id: str, topology: GraphTopology, weights: Weights) -> Classification:
    """Closed-form classifier for the five galaxy catalog graphs."""
    item = GALAXY_IDS.get(graph_id)
    if item is None:
        raise DispatchError(f"{graph_id!r} is not a galaxy catalog graph")
    check_config(topology, weights, positive=True)
    decomposition = galaxy_decompose(topology, weights)
    verdict = Verdict.LOSING if is_balanced(decomposition.pile_sums) else Verdict.WINNING
    return Classification(verdict, f"galaxy-{item}", {"piles": decomposition.pile_sums})
