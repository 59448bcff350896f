"""Shared verdict/classification types and exception types."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

# Hard cap on a single edge weight at the API boundary; keeps packed state
# keys compact and is far above anything the verification sweeps need.
MAX_EDGE_WEIGHT = 1 << 16


class Verdict(enum.Enum):
    """Outcome of a position from the point of view of the player to move.

    The solver only ever produces WINNING or LOSING (every position is one
    of the two); UNKNOWN exists for the partial H1 rule engine.
    """

    WINNING = "Winning"
    LOSING = "Losing"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    """A closed-form verdict: which rule fired and its structured witness.

    ``rule`` is one of the stable rule identifier strings; ``trace`` holds
    the rule's parameter witness (a dataclass or dict) when one exists.
    """

    verdict: Verdict
    rule: str
    trace: Any = None


class GraphNimError(Exception):
    """Base class for all errors raised by this package."""


class CatalogError(GraphNimError):
    """Unknown catalog graph identifier."""


class InvalidConfigError(GraphNimError):
    """Weight vector does not fit the topology (length, sign, or cap)."""


class IllegalMoveError(GraphNimError):
    """Move violates legality: bad vertex, removal exceeding a weight, or
    zero total removal."""


class NotGalaxyError(GraphNimError):
    """Graph has a connected component that is not a star."""


class DispatchError(GraphNimError):
    """Classifier called with a graph id outside its domain."""


class UnsupportedGraphError(GraphNimError):
    """No closed-form classifier exists for this topology; use the solver."""


class CapacityError(GraphNimError):
    """State exceeds the solver's configured weight bound or table budget."""


class ContradictionError(GraphNimError):
    """A winning rule and a losing rule both matched the same position."""

    def __init__(self, message: str, winning_trace=None, losing_trace=None):
        super().__init__(message)
        self.winning_trace = winning_trace
        self.losing_trace = losing_trace
