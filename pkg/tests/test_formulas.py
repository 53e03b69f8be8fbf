"""Closed-form counts checked against worked examples and each other."""

import pytest
from hypothesis import given

from conftest import LARGE, SMALL, diagrams
from kohnert.diagram import Cell, Diagram
from kohnert.formulas import (
    CellNotInDiagram,
    blockers_count,
    column_profiles,
    empty_count,
    max_min_empty,
    max_moves,
    min_moves,
    room,
    rooms,
)


def test_blockers_count_includes_the_cell_itself():
    assert blockers_count(SMALL, (2, 2), 2) == 1
    assert blockers_count(SMALL, (3, 3), 3) == 2
    assert blockers_count(SMALL, (3, 3), 1) == 2
    assert blockers_count(SMALL, (1, 1), 3) == 0
    assert blockers_count(SMALL, (2, 2), 3) == 1
    assert blockers_count(SMALL, (1, 1), 5) == 0


def test_blockers_count_requires_membership():
    with pytest.raises(CellNotInDiagram):
        blockers_count(SMALL, (1, 2), 1)
    with pytest.raises(CellNotInDiagram):
        room(SMALL, (5, 5))


def test_room_small():
    expected = {
        Cell(1, 1): 0,
        Cell(2, 1): 0,
        Cell(2, 2): 1,
        Cell(2, 3): 1,
        Cell(3, 3): 1,
    }
    assert rooms(SMALL) == expected
    for cell, want in expected.items():
        assert room(SMALL, cell) == want


def test_room_large_spot_values():
    assert room(LARGE, (7, 2)) == 3
    assert room(LARGE, (4, 5)) == 3
    assert room(LARGE, (2, 1)) == 1
    assert room(LARGE, (6, 8)) == 4


def test_max_moves_golden():
    assert max_moves(SMALL) == 3
    assert max_moves(LARGE) == 41
    assert max_moves(Diagram()) == 0
    assert max_moves(Diagram([(1, 1)])) == 0
    assert max_moves(Diagram([(3, 1)])) == 2


def test_column_profiles_small():
    profiles = column_profiles(SMALL)
    assert [(p.col, p.count, p.top_row, p.right_max, p.h) for p in profiles] == [
        (1, 2, 2, 2, 2),
        (2, 1, 2, 2, 2),
        (3, 2, 3, 0, 2),
    ]


def test_column_profiles_large():
    profiles = column_profiles(LARGE)
    assert [p.h for p in profiles] == [2, 4, 3, 3, 2, 2, 2, 2]
    assert [p.count for p in profiles] == [1, 4, 3, 3, 1, 2, 1, 2]
    assert [p.top_row for p in profiles] == [2, 7, 7, 5, 4, 6, 6, 6]
    assert [p.right_max for p in profiles] == [4, 3, 3, 2, 2, 2, 2, 0]


def test_empty_column_has_no_h():
    profiles = column_profiles(Diagram([(2, 1), (1, 3)]))
    assert profiles[1].count == 0
    assert profiles[1].h is None
    assert profiles[1].top_row == 0
    assert column_profiles(Diagram()) == []


def test_h_when_right_max_equals_top_row():
    # column 1: count 1 < right_max 3 = top row; its cell is already held up
    d = Diagram([(3, 1), (1, 2), (2, 2), (3, 2)])
    profiles = column_profiles(d)
    assert profiles[0].h == 3
    assert min_moves(d) == 0


def test_min_moves_golden():
    assert min_moves(SMALL) == 1
    assert min_moves(LARGE) == 23
    assert min_moves(Diagram()) == 0
    assert min_moves(Diagram([(3, 1)])) == 2


def test_max_min_empty_golden():
    assert max_min_empty(SMALL) == 1
    assert max_min_empty(LARGE) == 3
    assert max_min_empty(Diagram([(3, 1)])) == 0


def test_empty_count_golden():
    assert empty_count(SMALL) == 2
    assert empty_count(LARGE) == 26


@given(diagrams())
def test_min_moves_is_empty_count_minus_max_min_empty(d):
    assert min_moves(d) == empty_count(d) - max_min_empty(d)


@given(diagrams())
def test_rooms_matches_per_cell_room(d):
    assert rooms(d) == {cell: room(d, cell) for cell in d}


@given(diagrams())
def test_blockers_matches_naive_count(d):
    for cell in d.cells[:4]:
        for col in range(1, d.max_col + 2):
            naive = sum(1 for r, c in d if c == col and r <= cell.row)
            assert blockers_count(d, cell, col) == naive


@given(diagrams())
def test_room_is_nonnegative_and_below_row(d):
    for cell, value in rooms(d).items():
        assert 0 <= value <= cell.row - 1


@given(diagrams())
def test_h_is_between_count_and_top_row(d):
    for p in column_profiles(d):
        if p.count:
            assert p.count <= p.h <= p.top_row
        else:
            assert p.h is None


@given(diagrams())
def test_min_never_exceeds_max(d):
    assert 0 <= min_moves(d) <= max_moves(d)
