"""Diagrams in the first quadrant and the Kohnert move.

A diagram is a finite set of cells (row, col) with row, col >= 1; rows are
numbered bottom-up, so row 1 is the lowest. The Kohnert move at row r takes
the rightmost cell of that row and drops it to the highest empty position
strictly below it in its own column, jumping over any occupied cells. Moves
that cannot act (empty row, or no empty position below) are trivial: they
return the diagram unchanged rather than raising.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


class ParseError(ValueError):
    """Malformed cell-list text; carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class NontrivialityViolation(Exception):
    """A chain step that was required to be nontrivial turned out trivial."""

    def __init__(self, index: int, row: int):
        super().__init__(f"move {index} at row {row} is trivial")
        self.index = index
        self.row = row


class Diagram:
    """Immutable set of cells with value equality.

    Cells are kept in canonical order, sorted by (col, row); two diagrams are
    equal iff their canonical cell sequences are equal, and hashing follows
    suit, so diagrams can key dicts and sets directly.
    """

    def __init__(self, cells: Iterable[tuple[int, int] | Cell] = ()):
        seen = set()
        for cell in cells:
            row, col = cell
            if row < 1 or col < 1:
                raise ValueError(f"cell ({row}, {col}) outside the first quadrant")
            seen.add(Cell(row, col))
        self.cells: tuple[Cell, ...] = tuple(sorted(seen, key=lambda c: (c.col, c.row)))
        self._set = frozenset(self.cells)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self._set

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Diagram({[tuple(c) for c in self.cells]})"

    @cached_property
    def column_rows(self) -> dict[int, list[int]]:
        """Sorted row lists per nonempty column."""
        cols: dict[int, list[int]] = {}
        for row, col in self.cells:
            cols.setdefault(col, []).append(row)
        # canonical order already sorts rows within each column
        return cols

    @cached_property
    def max_row(self) -> int:
        return max((c.row for c in self.cells), default=0)

    @cached_property
    def max_col(self) -> int:
        return self.cells[-1].col if self.cells else 0

    @cached_property
    def row_sum(self) -> int:
        return sum(c.row for c in self.cells)

    def rightmost_in_row(self, row: int) -> Cell | None:
        best = -1
        for r, c in self.cells:
            if r == row and c > best:
                best = c
        return Cell(row, best) if best >= 1 else None

    def top_of_column(self, col: int) -> int:
        """Row of the highest cell in the column, 0 if the column is empty."""
        rows = self.column_rows.get(col)
        return rows[-1] if rows else 0


@dataclass(frozen=True)
class MoveRecord:
    """Outcome of one Kohnert move: which cell moved where, if any."""

    row: int
    source: Cell | None
    target: Cell | None
    trivial: bool


@dataclass(frozen=True)
class Chain:
    """A sequence of nontrivial moves together with every diagram it visits.

    diagrams[0] is the start and diagrams[i+1] is the result of moves[i], so
    len(diagrams) == len(moves) + 1 always holds.
    """

    start: Diagram
    moves: tuple[MoveRecord, ...]
    diagrams: tuple[Diagram, ...]

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def end(self) -> Diagram:
        return self.diagrams[-1]

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(m.row for m in self.moves)


def kohnert_move(diagram: Diagram, row: int) -> tuple[Diagram, MoveRecord]:
    """Apply the Kohnert move at the given row.

    Returns the resulting diagram and a record of what happened. The result
    is the same object when the move is trivial, which makes "did anything
    change" checks cheap for callers.
    """
    if row < 1:
        raise ValueError(f"row must be >= 1, got {row}")
    source = diagram.rightmost_in_row(row)
    if source is None:
        return diagram, MoveRecord(row, None, None, True)
    col_rows = diagram.column_rows[source.col]
    below = col_rows[: bisect_left(col_rows, row)]
    if len(below) == row - 1:
        # column is solid beneath the cell: nowhere to land
        return diagram, MoveRecord(row, None, None, True)
    # highest row < `row` missing from the column
    landing = row - 1
    for occupied in reversed(below):
        if occupied == landing:
            landing -= 1
        else:
            break
    target = Cell(landing, source.col)
    moved = Diagram.__new__(Diagram)
    moved.cells = _resorted(diagram.cells, source, target)
    moved._set = (diagram._set - {source}) | {target}
    return moved, MoveRecord(row, source, target, False)


def _resorted(cells: tuple[Cell, ...], source: Cell, target: Cell) -> tuple[Cell, ...]:
    """Canonical cell tuple after replacing source with target.

    Source and target share a column and target sits lower, so only the
    segment between them shifts; rebuilding via sort keeps this simple and
    the tuples are small.
    """
    out = [c for c in cells if c != source]
    insort(out, target, key=lambda c: (c.col, c.row))
    return tuple(out)


def empty_positions(diagram: Diagram) -> frozenset[Cell]:
    """Positions not in the diagram that lie strictly below some cell of it."""
    holes = []
    for col, rows in diagram.column_rows.items():
        occupied = set(rows)
        holes.extend(Cell(r, col) for r in range(1, rows[-1]) if r not in occupied)
    return frozenset(holes)


def row_weight(diagram: Diagram) -> tuple[int, ...]:
    """Cell counts for rows 1..max_row; empty diagram gives ()."""
    counts = [0] * diagram.max_row
    for r, _ in diagram.cells:
        counts[r - 1] += 1
    return tuple(counts)


def column_weight(diagram: Diagram) -> tuple[int, ...]:
    """Cell counts for columns 1..max_col; empty diagram gives ()."""
    counts = [0] * diagram.max_col
    for _, c in diagram.cells:
        counts[c - 1] += 1
    return tuple(counts)


def movable_rows(diagram: Diagram) -> list[int]:
    """Rows whose Kohnert move is nontrivial, ascending."""
    rows = []
    for row in range(1, diagram.max_row + 1):
        source = diagram.rightmost_in_row(row)
        if source is None:
            continue
        col_rows = diagram.column_rows[source.col]
        if bisect_left(col_rows, row) < row - 1:
            rows.append(row)
    return rows


def is_minimal(diagram: Diagram) -> bool:
    """True iff every Kohnert move on the diagram is trivial."""
    return not movable_rows(diagram)


def apply_chain(diagram: Diagram, rows: Iterable[int]) -> Chain:
    """Apply moves at the given rows in order, requiring each to act.

    Raises NontrivialityViolation naming the offending 0-based index if any
    step comes back trivial.
    """
    diagrams = [diagram]
    moves = []
    current = diagram
    for index, row in enumerate(rows):
        current, record = kohnert_move(current, row)
        if record.trivial:
            raise NontrivialityViolation(index, row)
        moves.append(record)
        diagrams.append(current)
    return Chain(diagram, tuple(moves), tuple(diagrams))


def parse_diagram(text: str) -> Diagram:
    """Parse cell-list text: one "<row> <col>" per line.

    Blank lines and lines starting with '#' are ignored. Duplicate cells and
    non-positive coordinates are errors, reported with their line number.
    """
    cells: list[Cell] = []
    seen: set[Cell] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected '<row> <col>', got {raw!r}")
        try:
            row, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {raw!r}") from None
        if row < 1 or col < 1:
            raise ParseError(lineno, f"coordinates must be >= 1, got ({row}, {col})")
        cell = Cell(row, col)
        if cell in seen:
            raise ParseError(lineno, f"duplicate cell ({row}, {col})")
        seen.add(cell)
        cells.append(cell)
    return Diagram(cells)


def render_cells(diagram: Diagram) -> str:
    """Cell-list text in canonical order; parse_diagram round-trips it."""
    return "".join(f"{r} {c}\n" for r, c in diagram.cells)


def render_grid(diagram: Diagram) -> str:
    """ASCII grid, top row first: 'X' occupied, '.' empty, one line per row.

    The grid spans rows 1..max_row and columns 1..max_col; the empty diagram
    renders as the empty string.
    """
    if not diagram.cells:
        return ""
    width = diagram.max_col
    lines = []
    for row in range(diagram.max_row, 0, -1):
        lines.append("".join("X" if (row, col) in diagram else "." for col in range(1, width + 1)))
    return "\n".join(lines) + "\n"


_MASK = (1 << 64) - 1


def _splitmix64(seed: int) -> Iterator[int]:
    state = seed & _MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


def random_diagram(max_row: int, max_col: int, density: float, seed: int) -> Diagram:
    """Seeded random diagram on the max_row x max_col box.

    Each position, visited in canonical (col, row) order, is included when
    the next splitmix64 draw falls below floor(density * 2^64). The stream
    is fully pinned by the seed, so corpora reproduce across platforms.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    if max_row < 0 or max_col < 0:
        raise ValueError("box dimensions must be >= 0")
    threshold = int(density * (1 << 64))
    stream = _splitmix64(seed)
    cells = [
        Cell(row, col)
        for col in range(1, max_col + 1)
        for row in range(1, max_row + 1)
        if next(stream) < threshold
    ]
    return Diagram(cells)
