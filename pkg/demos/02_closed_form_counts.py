#!/usr/bin/env python3
"""The two closed-form counts, cell by cell and column by column.

The longest possible game from a board equals the sum over cells of their
"room": the cell's row minus the largest number of blockers in any column
weakly to its right. The shortest game to a dead board adds up, per column,
how far the column's top cell sits above its resting height h.
"""

from kohnert import (
    Diagram,
    column_profiles,
    empty_count,
    max_min_empty,
    max_moves,
    min_moves,
    render_grid,
    rooms,
)

SEVENTEEN = Diagram(
    [
        (2, 1),
        (2, 2), (4, 2), (5, 2), (7, 2),
        (3, 3), (5, 3), (7, 3),
        (2, 4), (4, 4), (5, 4),
        (4, 5),
        (3, 6), (6, 6),
        (6, 7),
        (3, 8), (6, 8),
    ]
)


def describe(name, d):
    print(f"=== {name}")
    print(render_grid(d), end="")
    print()
    print("room per cell (row - worst blocker count):")
    for cell, value in sorted(rooms(d).items(), key=lambda kv: (kv[0].col, kv[0].row)):
        print(f"  cell ({cell.row}, {cell.col}): room {value}")
    print(f"longest game: {max_moves(d)} moves")
    print()
    print("col count top right_max h  (top - h = moves this column needs)")
    for p in column_profiles(d):
        if p.count:
            print(f"  {p.col}    {p.count}    {p.top_row}    {p.right_max}        {p.h}")
    print(f"shortest game: {min_moves(d)} moves")
    print(f"empty positions now: {empty_count(d)}; "
          f"most empties any final board keeps: {max_min_empty(d)}")
    print(f"(shortest = {empty_count(d)} - {max_min_empty(d)} = {min_moves(d)})")
    print()


def main():
    describe("five-cell board", Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)]))
    describe("seventeen-cell board", SEVENTEEN)


if __name__ == "__main__":
    main()
