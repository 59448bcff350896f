"""Engine for the Game of Graph Nim on 4-edge graphs.

Brute-force retrograde solver (ground truth), closed-form classifiers for
every catalog graph, an exhaustive oracle-vs-classifier verification
harness, a CLI, and an HTTP play/analysis service.
"""

from .base import (
    MAX_EDGE_WEIGHT,
    CapacityError,
    CatalogError,
    Classification,
    ContradictionError,
    DispatchError,
    GraphNimError,
    IllegalMoveError,
    InvalidConfigError,
    NotGalaxyError,
    UnsupportedGraphError,
    Verdict,
)
from .topology import (
    CATALOG_IDS,
    GraphTopology,
    Move,
    apply_move,
    automorphism_edge_perms,
    canonicalize,
    catalog_graph,
    count_moves,
    custom_graph,
    enumerate_moves,
    triangle_graph,
    validate_move,
)
from .nim import (
    classify_galaxy,
    classify_nim,
    f_exp,
    galaxy_decompose,
    is_balanced,
    nim_sum,
    StarDecomposition,
)
from .solver import (
    HAVE_COMPILED_CORE,
    Solver,
    engine_move,
    optimal_move,
    shared_solver,
    solve,
)
from .rules import (
    H1BitProfile,
    H1Decomposition,
    SpecialWitness,
    classify,
    classify_F1,
    classify_F2,
    classify_G4,
    classify_H1,
    classify_allwin,
    classify_triangle,
    h1_bit_profile,
    h1_decompose,
    h1_matches,
    is_k_special,
    is_special,
    special_witness,
)
from .verify import VerificationReport, emit_report, parse_report, verify_graph

__all__ = [name for name in dir() if not name.startswith("_")]
