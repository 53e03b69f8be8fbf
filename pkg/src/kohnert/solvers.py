"""Constructive witnesses for the two closed-form counts.

solve_max realizes a longest chain greedily: always move at the lowest row
that admits a nontrivial move. solve_min realizes a shortest chain by
settling columns right to left; for each column whose top cell sits above
h it applies moves at rows top, top-1, ..., h+1, each of which drops that
column's top cell by exactly one row. Neither solver enumerates anything,
so both stay fast where the poset is astronomically large.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Chain, Diagram, MoveRecord, is_minimal, kohnert_move, movable_rows
from .formulas import column_profiles, max_moves, min_moves


@dataclass(frozen=True)
class SolveReport:
    """A solver run: the chain it built and the count it promised.

    predicted is the closed-form value computed up front; achieved is the
    chain's actual length. The constructors guarantee they match, so a
    mismatch can only mean a bug, not bad input.
    """

    mode: str
    chain: Chain
    predicted: int
    achieved: int


def _finish(mode: str, start: Diagram, moves: list[MoveRecord], diagrams: list[Diagram], predicted: int) -> SolveReport:
    chain = Chain(start, tuple(moves), tuple(diagrams))
    achieved = len(chain)
    if achieved != predicted:
        raise AssertionError(
            f"{mode} solver produced {achieved} moves where {predicted} were predicted"
        )
    return SolveReport(mode, chain, predicted, achieved)


def solve_max(diagram: Diagram) -> SolveReport:
    """Greedy longest chain: repeatedly move at the lowest movable row."""
    predicted = max_moves(diagram)
    moves: list[MoveRecord] = []
    diagrams = [diagram]
    current = diagram
    while True:
        live = movable_rows(current)
        if not live:
            break
        current, record = kohnert_move(current, live[0])
        moves.append(record)
        diagrams.append(current)
    return _finish("max", diagram, moves, diagrams, predicted)


def dhat(diagram: Diagram, col: int) -> Diagram:
    """Settle all columns weakly right of col, one column at a time.

    Nonempty columns are processed right to left. For a column whose top
    cell sits at row t in the *original* diagram, single moves are applied
    at rows t, t-1, ..., 1 in order; moves that come back trivial are
    skipped silently. The result is what the diagram looks like once every
    column >= col has dropped as far as the columns right of it allow.
    """
    tops = [
        (c, rows[-1])
        for c, rows in sorted(diagram.column_rows.items(), reverse=True)
        if c >= col
    ]
    current = diagram
    for _, top in tops:
        for row in range(top, 0, -1):
            current, _ = kohnert_move(current, row)
    return current


def solve_min(diagram: Diagram) -> SolveReport:
    """Shortest chain to a minimal diagram, no search.

    Columns settle right to left. Once every column right of c is settled,
    the top cell of column c can fall freely: each move at rows t, t-1,
    ..., h+1 is nontrivial and lowers that top cell by exactly one row,
    where t is the column's top row in the start diagram and h its resting
    height. Columns already at rest contribute nothing.
    """
    profiles = {p.col: p for p in column_profiles(diagram)}
    moves: list[MoveRecord] = []
    diagrams = [diagram]
    current = diagram
    for col in sorted(profiles, reverse=True):
        p = profiles[col]
        if p.count == 0 or p.top_row <= p.h:
            continue
        for row in range(p.top_row, p.h, -1):
            # each scheduled move takes this column's top cell, and the new
            # top is one row lower (the cell itself may fall further, past
            # occupied rows, in which case an old cell becomes the top)
            assert current.top_of_column(col) == row
            current, record = kohnert_move(current, row)
            assert not record.trivial, (col, row)
            assert record.source == (row, col)
            assert current.top_of_column(col) == row - 1
            moves.append(record)
            diagrams.append(current)
    report = _finish("min", diagram, moves, diagrams, min_moves(diagram))
    assert is_minimal(report.chain.end)
    return report
