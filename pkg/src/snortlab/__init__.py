"""Snort engine and strategy laboratory for triangular grid boards."""

from .graphs import (
    Family,
    Graph,
    GraphSizeError,
    VertexLabel,
    build_family,
    build_grid,
    build_path,
    build_variant,
    disjoint_union,
    export_dot,
)
from .position import (
    IllegalMoveError,
    Outcome,
    Player,
    Position,
    initial_position,
)
from .solver import (
    ResourceBudgetError,
    Solver,
    SolveStats,
    best_moves,
    brute_force_wins,
    outcome,
    solve_family,
    wins_moving,
)
from .strategy import (
    MirrorMap,
    NoStrategyError,
    SmallCaseError,
    SplitSpec,
    SplitTableError,
    StrategyBreachError,
    VerificationReport,
    check_symmetric_union,
    copycat_response,
    derive_mirror,
    prescribed_alternatives,
    prescribed_move,
    split_spec,
    verify_copycat,
)

__version__ = "0.1.0"
