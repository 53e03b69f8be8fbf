"""Kohnert diagrams: moves, posets, closed-form move counts, and solvers.

The library models diagrams of cells in the first quadrant and the Kohnert
move, which drops the rightmost cell of a row to the first gap below it in
its column. It can enumerate everything reachable, compute the exact length
of longest and shortest move chains without enumerating, and produce chains
realizing both. A CLI (`kohnert`) and a small REST puzzle service sit on
top.
"""

from .diagram import (
    Cell,
    Chain,
    Diagram,
    MoveRecord,
    NontrivialityViolation,
    ParseError,
    apply_chain,
    column_weight,
    empty_positions,
    is_minimal,
    kohnert_move,
    movable_rows,
    parse_diagram,
    random_diagram,
    render_cells,
    render_grid,
    row_weight,
)
from .formulas import (
    CellNotInDiagram,
    ColumnProfile,
    blockers_count,
    column_profiles,
    empty_count,
    max_min_empty,
    max_moves,
    min_moves,
    room,
    rooms,
)
from .labeling import (
    ColumnWeightMismatch,
    Tableau,
    is_flagged,
    is_strict,
    move_counts,
    standard_cells,
    standard_labeling,
    super_standard,
)
from .poset import (
    LimitExceeded,
    PosetGraph,
    enumerate_poset,
    export_dot,
    longest_chain,
    max_empty_over_minimal,
    shortest_to_minimal,
)
from .solvers import SolveReport, dhat, solve_max, solve_min

__all__ = [
    "Cell",
    "Chain",
    "Diagram",
    "MoveRecord",
    "NontrivialityViolation",
    "ParseError",
    "apply_chain",
    "column_weight",
    "empty_positions",
    "is_minimal",
    "kohnert_move",
    "movable_rows",
    "parse_diagram",
    "random_diagram",
    "render_cells",
    "render_grid",
    "row_weight",
    "CellNotInDiagram",
    "ColumnProfile",
    "blockers_count",
    "column_profiles",
    "empty_count",
    "max_min_empty",
    "max_moves",
    "min_moves",
    "room",
    "rooms",
    "ColumnWeightMismatch",
    "Tableau",
    "is_flagged",
    "is_strict",
    "move_counts",
    "standard_cells",
    "standard_labeling",
    "super_standard",
    "LimitExceeded",
    "PosetGraph",
    "enumerate_poset",
    "export_dot",
    "longest_chain",
    "max_empty_over_minimal",
    "shortest_to_minimal",
    "SolveReport",
    "dhat",
    "solve_max",
    "solve_min",
]

__version__ = "0.1.0"
