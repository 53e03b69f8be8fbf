"""Closed-form move counts.

Two exact formulas drive everything here. The number of moves in a longest
chain from a diagram equals the total "room" of its cells, where a cell's
room is its row minus the largest blocker count over columns weakly to its
right. The number of moves in a shortest chain to a minimal diagram equals,
column by column, how far the column's top cell sits above the height h it
ends at in every minimal diagram of the same column weights.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .diagram import Cell, Diagram, empty_positions


class CellNotInDiagram(KeyError):
    def __init__(self, cell: Cell):
        super().__init__(cell)
        self.cell = Cell(*cell)

    def __str__(self) -> str:
        return f"cell ({self.cell.row}, {self.cell.col}) is not in the diagram"


@dataclass(frozen=True)
class ColumnProfile:
    """Per-column statistics; h is None exactly when the column is empty.

    count is the column's cell count, top_row the row of its highest cell
    (0 when empty), right_max the largest cell count among columns strictly
    to the right, and h the height below which the column's cells settle in
    any minimal diagram reachable from this one.
    """

    col: int
    count: int
    top_row: int
    right_max: int
    h: int | None


def blockers_count(diagram: Diagram, cell: Cell | tuple[int, int], col: int) -> int:
    """Cells of the given column lying weakly below the cell's row.

    For the cell's own column this counts the cell itself. The cell must
    belong to the diagram.
    """
    cell = Cell(*cell)
    if cell not in diagram:
        raise CellNotInDiagram(cell)
    rows = diagram.column_rows.get(col, [])
    return bisect_right(rows, cell.row)


def room(diagram: Diagram, cell: Cell | tuple[int, int]) -> int:
    """How many moves the cell can absorb: row minus worst blocker count.

    The maximum runs over the cell's own column and all columns to its
    right. Always >= 0 since the cell blocks itself.
    """
    cell = Cell(*cell)
    if cell not in diagram:
        raise CellNotInDiagram(cell)
    worst = max(
        blockers_count(diagram, cell, col)
        for col in range(cell.col, diagram.max_col + 1)
    )
    return cell.row - worst


def rooms(diagram: Diagram) -> dict[Cell, int]:
    """Room of every cell at once.

    Equivalent to {c: room(diagram, c) for c in diagram} but built from one
    right-to-left pass of per-row suffix maxima, which keeps sweeps over
    large corpora cheap.
    """
    max_row = diagram.max_row
    # worst[r] = max over columns >= current of cells weakly below row r
    worst = [0] * (max_row + 1)
    out: dict[Cell, int] = {}
    for col in range(diagram.max_col, 0, -1):
        col_rows = diagram.column_rows.get(col, [])
        count = 0
        for r in range(1, max_row + 1):
            if count < len(col_rows) and col_rows[count] == r:
                count += 1
            if count > worst[r]:
                worst[r] = count
        for r in col_rows:
            out[Cell(r, col)] = r - worst[r]
    return out


def max_moves(diagram: Diagram) -> int:
    """Length of a longest chain of nontrivial moves from the diagram."""
    return sum(rooms(diagram).values())


def column_profiles(diagram: Diagram) -> list[ColumnProfile]:
    """Profiles for columns 1..max_col, right to left for right_max.

    h = min(top_row, max(count, right_max)): the column's cells cannot
    settle above its own count unless taller columns to the right prop them
    up, and never above the column's current top.
    """
    profiles: list[ColumnProfile] = []
    right_max = 0
    for col in range(diagram.max_col, 0, -1):
        col_rows = diagram.column_rows.get(col, [])
        count = len(col_rows)
        top = col_rows[-1] if col_rows else 0
        if count == 0:
            h = None
        elif right_max >= top:
            h = top
        elif count >= right_max:
            h = count
        else:
            h = right_max
        if h is not None:
            assert h == min(top, max(count, right_max))
        profiles.append(ColumnProfile(col, count, top, right_max, h))
        if count > right_max:
            right_max = count
    profiles.reverse()
    return profiles


def min_moves(diagram: Diagram) -> int:
    """Length of a shortest chain from the diagram to a minimal diagram."""
    return sum(p.top_row - p.h for p in column_profiles(diagram) if p.count)


def max_min_empty(diagram: Diagram) -> int:
    """Largest number of empty positions over reachable minimal diagrams."""
    return sum(p.h - p.count for p in column_profiles(diagram) if p.count)


def empty_count(diagram: Diagram) -> int:
    return len(empty_positions(diagram))
