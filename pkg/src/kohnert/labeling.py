"""Labeled diagrams and per-cell attribution of moves.

A labeling assigns a positive integer to every cell. The standard labeling
of D relative to D0 re-creates, column by column, the row numbers the cells
had back in D0: within each column the sorted original rows are assigned to
the current cells bottom-up. It is the unique strict labeling that is
column-equivalent to labeling D0 by its own row numbers. Tracking labels
along a chain says which original cell each move should be charged to, and
those charges are what the room bound counts.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Mapping

from .diagram import Cell, Chain, Diagram, column_weight


class ColumnWeightMismatch(ValueError):
    """The two diagrams do not have identical column weights."""


@dataclass(frozen=True)
class Tableau:
    """A diagram together with a labeling of exactly its cells."""

    diagram: Diagram
    labels: Mapping[Cell, int]

    def __post_init__(self):
        if set(self.labels) != set(self.diagram.cells):
            raise ValueError("labels must cover exactly the cells of the diagram")
        if any(v < 1 for v in self.labels.values()):
            raise ValueError("labels must be positive")

    def label(self, cell: Cell | tuple[int, int]) -> int:
        return self.labels[Cell(*cell)]


def super_standard(diagram: Diagram) -> Tableau:
    """Label every cell by its own row number."""
    return Tableau(diagram, {cell: cell.row for cell in diagram})


def is_strict(tableau: Tableau) -> bool:
    """Labels strictly increase up each column."""
    for col, rows in tableau.diagram.column_rows.items():
        labels = [tableau.labels[Cell(r, col)] for r in rows]
        if any(a >= b for a, b in zip(labels, labels[1:])):
            return False
    return True


def is_flagged(tableau: Tableau) -> bool:
    """Every label is at least the row of its cell."""
    return all(label >= cell.row for cell, label in tableau.labels.items())


def standard_labeling(diagram: Diagram, origin: Diagram) -> Tableau:
    """Standard labeling of diagram relative to origin.

    Requires identical column weights; within each column the origin's row
    numbers are handed out to the diagram's cells from the bottom up, which
    is the only strict assignment. Flaggedness additionally holds whenever
    diagram is reachable from origin by Kohnert moves, but is not checked.
    """
    if column_weight(diagram) != column_weight(origin):
        raise ColumnWeightMismatch(
            f"column weights differ: {column_weight(diagram)} vs {column_weight(origin)}"
        )
    labels: dict[Cell, int] = {}
    for col, rows in diagram.column_rows.items():
        for row, original_row in zip(rows, origin.column_rows[col]):
            labels[Cell(row, col)] = original_row
    return Tableau(diagram, labels)


def standard_cells(diagram: Diagram, origin: Diagram) -> dict[Cell, Cell]:
    """Where each origin cell's label currently sits: origin cell -> cell.

    The inverse view of standard_labeling, column by column.
    """
    out: dict[Cell, Cell] = {}
    if column_weight(diagram) != column_weight(origin):
        raise ColumnWeightMismatch(
            f"column weights differ: {column_weight(diagram)} vs {column_weight(origin)}"
        )
    for col, rows in diagram.column_rows.items():
        for row, original_row in zip(rows, origin.column_rows[col]):
            out[Cell(original_row, col)] = Cell(row, col)
    return out


def move_counts(chain: Chain) -> dict[Cell, int]:
    """How many chain moves each cell of the start diagram absorbed.

    A step is charged to the start cell whose label, under the standard
    labeling of the pre-move diagram relative to the start, the moved cell
    carries. Within the moved cell's column that label is just the start
    row with the same bottom-up rank, so no full relabeling is needed.
    Counts sum to the chain length.
    """
    counts: dict[Cell, int] = {cell: 0 for cell in chain.start}
    for step, record in enumerate(chain.moves):
        before = chain.diagrams[step]
        col_rows = before.column_rows[record.source.col]
        rank = bisect_left(col_rows, record.source.row)
        label = chain.start.column_rows[record.source.col][rank]
        counts[Cell(label, record.source.col)] += 1
    return counts
