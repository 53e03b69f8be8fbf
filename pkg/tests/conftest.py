"""Shared example boards and strategies.

SMALL is the 5-cell walkthrough diagram whose full move poset has 5 nodes;
LARGE is the 17-cell board with 41 maximal and 23 minimal moves. Both are
used as golden values throughout the suite.
"""

from hypothesis import strategies as st

from kohnert.diagram import Diagram

SMALL = Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)])

LARGE = Diagram(
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

# staircase with one overhang, used for labeling examples
HOOK = Diagram([(3, 1), (4, 1), (2, 2), (2, 3), (3, 3), (4, 3), (2, 4), (4, 4)])


def diagrams(max_row: int = 6, max_col: int = 6, max_cells: int = 12):
    """Strategy producing small arbitrary diagrams."""
    cell = st.tuples(st.integers(1, max_row), st.integers(1, max_col))
    return st.builds(Diagram, st.lists(cell, max_size=max_cells))
