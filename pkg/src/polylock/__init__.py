"""Toolkit for interlocking analysis of polyomino systems on the integer grid."""

from .classify import (
    EnclosedHoleError,
    MonotoneReport,
    Pocket,
    classify,
    find_u_pentominoes,
    is_monotone,
    pockets,
)
from .corridor import (
    ChainReport,
    CorridorScene,
    InfeasibleSceneError,
    PinningReport,
    RectChainScene,
    chain_hypotheses_hold,
    corridor_pins_horizontally,
    rotated_vertical_extent,
)
from .grid import (
    Cell,
    Configuration,
    Direction,
    DIRECTIONS,
    OverlapError,
    Placement,
    Polyomino,
    canonical_free_form,
    canonicalize,
    enumerate_free,
    occupied_cells,
    sweep_collides,
)
from .search import (
    KeyPieceAnswer,
    SINGLE_PIECE,
    SUBSET_MOVE,
    SearchBudget,
    SearchState,
    SearchVerdict,
    escape_search,
    key_piece_reachable,
    legal_moves,
    replay_trace,
    slide_dependency,
)
from .separation import (
    BlockingGraph,
    Group,
    InvariantViolationError,
    Move,
    NoUto,
    OversizedPieceError,
    PlanError,
    SeparationPlan,
    SimulationReport,
    blocking_graph,
    group_le5,
    plan_uto,
    separate_le5,
    simulate_plan,
)

__all__ = [
    "BlockingGraph",
    "Cell",
    "ChainReport",
    "Configuration",
    "CorridorScene",
    "Direction",
    "DIRECTIONS",
    "EnclosedHoleError",
    "Group",
    "InfeasibleSceneError",
    "InvariantViolationError",
    "KeyPieceAnswer",
    "MonotoneReport",
    "Move",
    "NoUto",
    "OverlapError",
    "OversizedPieceError",
    "Placement",
    "PlanError",
    "PinningReport",
    "Pocket",
    "Polyomino",
    "RectChainScene",
    "SINGLE_PIECE",
    "SUBSET_MOVE",
    "SearchBudget",
    "SearchState",
    "SearchVerdict",
    "SeparationPlan",
    "SimulationReport",
    "blocking_graph",
    "canonical_free_form",
    "canonicalize",
    "chain_hypotheses_hold",
    "classify",
    "corridor_pins_horizontally",
    "enumerate_free",
    "escape_search",
    "find_u_pentominoes",
    "group_le5",
    "is_monotone",
    "key_piece_reachable",
    "legal_moves",
    "occupied_cells",
    "pockets",
    "plan_uto",
    "replay_trace",
    "rotated_vertical_extent",
    "separate_le5",
    "simulate_plan",
    "slide_dependency",
    "sweep_collides",
]
