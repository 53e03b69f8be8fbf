#!/usr/bin/env python3
"""Boards, the Kohnert move, and what "minimal" means.

Walks the 5-cell example board through a couple of moves, printing the
grid after each one.
"""

from kohnert import (
    empty_positions,
    is_minimal,
    kohnert_move,
    movable_rows,
    parse_diagram,
    render_grid,
    row_weight,
    column_weight,
)

BOARD = """\
# five cells, three columns
1 1
2 1
2 2
2 3
3 3
"""


def show(title, diagram):
    print(f"--- {title}")
    print(render_grid(diagram), end="")
    print(f"rows with a legal move: {movable_rows(diagram)}")
    print(f"empty positions: {sorted(empty_positions(diagram))}")
    print()


def main():
    d = parse_diagram(BOARD)
    print(f"row weights    {row_weight(d)}")
    print(f"column weights {column_weight(d)}")
    print()
    show("start", d)

    # the move takes the rightmost cell of the row and drops it to the
    # first gap below it in its own column
    d2, record = kohnert_move(d, 2)
    print(f"move at row 2: cell {tuple(record.source)} -> {tuple(record.target)}")
    show("after moving row 2", d2)

    d3, record = kohnert_move(d2, 2)
    print(f"move at row 2 again: {tuple(record.source)} -> {tuple(record.target)}")
    show("after moving row 2 again", d3)

    d4, record = kohnert_move(d3, 3)
    print(f"move at row 3: {tuple(record.source)} -> {tuple(record.target)}")
    show("after moving row 3", d4)

    print(f"is the final board minimal? {is_minimal(d4)}")
    same, record = kohnert_move(d4, 2)
    print(f"trying row 2 once more is trivial: {record.trivial}, board unchanged: {same == d4}")


if __name__ == "__main__":
    main()
