"""Labelings and move attribution, checked against the room bound."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL, diagrams
from kohnert.diagram import (
    Cell,
    Diagram,
    apply_chain,
    kohnert_move,
    movable_rows,
)
from kohnert.formulas import room, rooms
from kohnert.labeling import (
    ColumnWeightMismatch,
    Tableau,
    is_flagged,
    is_strict,
    move_counts,
    standard_cells,
    standard_labeling,
    super_standard,
)
from kohnert.poset import enumerate_poset
from kohnert.solvers import solve_max

D2 = Diagram([(1, 1), (2, 1), (2, 2), (2, 3), (1, 3)])
D4 = Diagram([(1, 1), (2, 1), (1, 2), (2, 3), (1, 3)])


def random_chain(d, rng):
    rows = []
    current = d
    while True:
        live = movable_rows(current)
        if not live:
            return apply_chain(d, rows)
        row = rng.choice(live)
        rows.append(row)
        current = kohnert_move(current, row)[0]


def test_tableau_validates_domain():
    with pytest.raises(ValueError):
        Tableau(SMALL, {Cell(1, 1): 1})
    with pytest.raises(ValueError):
        Tableau(Diagram([(1, 1)]), {Cell(1, 1): 0})
    t = super_standard(SMALL)
    assert t.label((3, 3)) == 3


def test_super_standard_is_strict_and_flagged():
    t = super_standard(SMALL)
    assert is_strict(t) and is_flagged(t)
    assert t.labels[Cell(2, 2)] == 2


def test_strict_flagged_labeling_that_is_not_standard():
    # the label sets force a unique candidate origin, and this diagram is
    # not reachable from it, so the labeling is standard relative to nothing
    d = Diagram([(1, 1), (1, 2), (2, 2)])
    t = Tableau(d, {Cell(1, 1): 2, Cell(1, 2): 1, Cell(2, 2): 2})
    assert is_strict(t) and is_flagged(t)
    origin = Diagram([(label, cell.col) for cell, label in t.labels.items()])
    assert d not in set(enumerate_poset(origin).nodes)


def test_standard_labeling_relative_to_itself():
    for d in (SMALL, D4, Diagram()):
        assert standard_labeling(d, d) == super_standard(d)


def test_standard_labeling_small_examples():
    t = standard_labeling(D2, SMALL)
    assert t.labels == {
        Cell(1, 1): 1,
        Cell(2, 1): 2,
        Cell(2, 2): 2,
        Cell(1, 3): 2,
        Cell(2, 3): 3,
    }
    t = standard_labeling(D4, SMALL)
    assert t.labels == {
        Cell(1, 1): 1,
        Cell(2, 1): 2,
        Cell(1, 2): 2,
        Cell(1, 3): 2,
        Cell(2, 3): 3,
    }
    assert is_strict(t) and is_flagged(t)


def test_standard_cells_inverts_standard_labeling():
    mapping = standard_cells(D4, SMALL)
    assert mapping[Cell(3, 3)] == Cell(2, 3)
    assert mapping[Cell(2, 2)] == Cell(1, 2)
    assert mapping[Cell(1, 1)] == Cell(1, 1)
    t = standard_labeling(D4, SMALL)
    for origin_cell, position in mapping.items():
        assert position.col == origin_cell.col
        assert t.labels[position] == origin_cell.row


def test_column_weight_mismatch_raises():
    with pytest.raises(ColumnWeightMismatch):
        standard_labeling(SMALL, Diagram([(1, 1)]))
    with pytest.raises(ColumnWeightMismatch):
        standard_cells(Diagram([(1, 1)]), Diagram([(1, 2)]))


def test_move_counts_greedy_small():
    chain = solve_max(SMALL).chain
    assert move_counts(chain) == {
        Cell(1, 1): 0,
        Cell(2, 1): 0,
        Cell(2, 2): 1,
        Cell(2, 3): 1,
        Cell(3, 3): 1,
    }


def test_move_counts_charges_by_label_not_by_tracking():
    # moving at rows 4 then 3: the first move drops the top cell under the
    # other one, so the second move, though it touches the cell that began
    # at row 3, is charged by label to the cell that began at row 4
    d = Diagram([(3, 1), (4, 1)])
    chain = apply_chain(d, [4, 3])
    assert move_counts(chain) == {Cell(4, 1): 2, Cell(3, 1): 0}


def test_move_counts_empty_chain():
    chain = apply_chain(SMALL, [])
    assert move_counts(chain) == {cell: 0 for cell in SMALL}


@settings(max_examples=60, deadline=None)
@given(diagrams(), st.randoms(use_true_random=False))
def test_move_counts_conserve_and_respect_room(d, rng):
    chain = random_chain(d, rng)
    counts = move_counts(chain)
    assert set(counts) == set(d.cells)
    assert sum(counts.values()) == len(chain)
    bound = rooms(d)
    assert all(counts[cell] <= bound[cell] for cell in d)


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_greedy_chain_meets_room_exactly(d):
    counts = move_counts(solve_max(d).chain)
    assert counts == rooms(d)


@settings(max_examples=40, deadline=None)
@given(diagrams(), st.randoms(use_true_random=False))
def test_standard_room_never_increases_along_chains(d, rng):
    chain = random_chain(d, rng)
    for cell in d:
        last = None
        for step in chain.diagrams:
            current = room(step, standard_cells(step, d)[cell])
            if last is not None:
                assert current <= last
            last = current


@settings(max_examples=60, deadline=None)
@given(diagrams(), st.randoms(use_true_random=False))
def test_standard_labeling_of_reachable_diagrams(d, rng):
    chain = random_chain(d, rng)
    t = standard_labeling(chain.end, d)
    assert is_strict(t) and is_flagged(t)
    for col, rows in chain.end.column_rows.items():
        got = sorted(t.labels[Cell(r, col)] for r in rows)
        assert got == d.column_rows[col]
