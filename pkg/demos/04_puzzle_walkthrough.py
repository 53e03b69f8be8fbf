#!/usr/bin/env python3
"""Playing both puzzles perfectly with the built-in solvers.

Max mode: stretch the game as long as possible. The greedy rule "always
move at the lowest row that still moves" is provably optimal. Min mode:
kill the board as fast as possible by settling columns right to left.
"""

from kohnert import Diagram, move_counts, render_grid, rooms, solve_max, solve_min

BOARD = Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)])


def walk(report):
    print(f"{report.mode} mode: predicted {report.predicted} moves")
    for step, record in enumerate(report.chain.moves, start=1):
        print(f"step {step}: row {record.row}, "
              f"cell {tuple(record.source)} -> {tuple(record.target)}")
        print(render_grid(report.chain.diagrams[step]), end="")
    print(f"achieved {report.achieved}\n")


def main():
    print("start:")
    print(render_grid(BOARD))

    walk(solve_max(BOARD))
    walk(solve_min(BOARD))

    # in the longest game every cell absorbs exactly its room
    counts = move_counts(solve_max(BOARD).chain)
    budget = rooms(BOARD)
    print("cell          room  moves absorbed (longest game)")
    for cell in BOARD:
        print(f"({cell.row}, {cell.col})          {budget[cell]}     {counts[cell]}")


if __name__ == "__main__":
    main()
