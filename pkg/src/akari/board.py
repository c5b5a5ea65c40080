"""Board model and scoring for the Light Up puzzle.

A board is a rectangular grid of single-digit cell codes:

* ``0``-``5`` -- black cell; the digit is the required number of
  orthogonally adjacent bulbs (``5`` can never be satisfied, but it is
  accepted and simply counts as a standing violation),
* ``6`` -- empty white cell,
* ``7`` -- white cell holding a bulb,
* ``8`` -- white cell lit by some bulb,
* ``9`` -- white cell on which bulbs may not be placed.

Black cells block light.  A bulb lights its own cell plus every white
cell in the four orthogonal directions up to the nearest black cell or
the board edge.  Bulbs do not block light.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, NamedTuple


class Cell(IntEnum):
    """Single-digit cell codes."""

    BLACK_ZERO = 0
    BLACK_ONE = 1
    BLACK_TWO = 2
    BLACK_THREE = 3
    BLACK_FOUR = 4
    BLACK_FIVE = 5
    EMPTY = 6
    BULB = 7
    LIT = 8
    FORBIDDEN = 9

    def is_black(self) -> bool:
        return self <= Cell.BLACK_FIVE

    def is_white(self) -> bool:
        return self >= Cell.EMPTY


class Position(NamedTuple):
    row: int
    col: int


class BoardError(ValueError):
    """Raised for malformed board text or out-of-range coordinates."""


@dataclass(frozen=True)
class Board:
    """Immutable rectangular grid of :class:`Cell` codes.

    ``cells`` is stored row-major: cell (r, c) lives at index
    ``r * width + c``.
    """

    width: int
    height: int
    cells: tuple[Cell, ...]

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise BoardError(f"board size must be positive, got {self.width}x{self.height}")
        if len(self.cells) != self.width * self.height:
            raise BoardError(
                f"expected {self.width * self.height} cells, got {len(self.cells)}"
            )

    def index(self, pos: Position) -> int:
        if not (0 <= pos.row < self.height and 0 <= pos.col < self.width):
            raise BoardError(f"position {tuple(pos)} outside {self.width}x{self.height} board")
        return pos.row * self.width + pos.col

    def cell(self, pos: Position) -> Cell:
        return self.cells[self.index(pos)]

    def replace_cells(self, changes: dict[Position, Cell]) -> "Board":
        cells = list(self.cells)
        for pos, code in changes.items():
            cells[self.index(pos)] = code
        return Board(self.width, self.height, tuple(cells))

    def positions(self) -> Iterable[Position]:
        for r in range(self.height):
            for c in range(self.width):
                yield Position(r, c)

    def neighbors(self, pos: Position) -> Iterable[Position]:
        """Orthogonally adjacent in-bounds positions."""
        r, c = pos
        if r > 0:
            yield Position(r - 1, c)
        if r + 1 < self.height:
            yield Position(r + 1, c)
        if c > 0:
            yield Position(r, c - 1)
        if c + 1 < self.width:
            yield Position(r, c + 1)


@dataclass(frozen=True)
class ConflictReport:
    """Rule violations present on a board.

    ``bulb_pairs_shining`` counts unordered pairs of bulbs that see each
    other along an unblocked row or column.  ``black_violations`` counts
    black cells whose adjacent-bulb count differs from their digit.
    """

    bulb_pairs_shining: int
    black_violations: int

    @property
    def total(self) -> int:
        return self.bulb_pairs_shining + self.black_violations


@dataclass(frozen=True)
class Fitness:
    """Scalar objective plus the pieces it was computed from."""

    value: float
    lit_fraction: float
    conflicts: ConflictReport


def parse_board(text: str) -> Board:
    """Parse digit rows into a :class:`Board`.

    Rows are newline-separated strings of the digits 0-9, all the same
    length.  Errors name the offending line and column (1-based).
    """
    lines = text.split("\n")
    # A single trailing newline is allowed, anything further is not.
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise BoardError("line 1, column 1: empty board text")
    width = len(lines[0])
    rows: list[list[Cell]] = []
    for i, line in enumerate(lines, start=1):
        if len(line) != width:
            col = min(len(line), width) + 1
            raise BoardError(
                f"line {i}, column {col}: expected {width} characters, got {len(line)}"
            )
        if width == 0:
            raise BoardError(f"line {i}, column 1: empty line")
        row = []
        for j, ch in enumerate(line, start=1):
            if not ch.isdigit() or not ch.isascii():
                raise BoardError(f"line {i}, column {j}: invalid cell {ch!r}")
            row.append(Cell(int(ch)))
        rows.append(row)
    cells = tuple(code for row in rows for code in row)
    return Board(width=width, height=len(rows), cells=cells)


def serialize_board(board: Board) -> str:
    """Inverse of :func:`parse_board`; no trailing newline."""
    w = board.width
    return "\n".join(
        "".join(str(int(c)) for c in board.cells[r * w : (r + 1) * w])
        for r in range(board.height)
    )


def _segments(board: Board) -> tuple[list[int], list[int], int, int]:
    """Assign every white cell a row-segment id and a column-segment id.

    A segment is a maximal run of white cells between black cells (or
    board edges).  Two cells see each other iff they share a segment.
    Black cells keep id -1.  Returns (row_ids, col_ids, n_row, n_col).
    """
    w, h = board.width, board.height
    cells = board.cells
    row_ids = [-1] * (w * h)
    col_ids = [-1] * (w * h)
    n_row = 0
    for r in range(h):
        open_seg = False
        for c in range(w):
            i = r * w + c
            if cells[i].is_black():
                if open_seg:
                    n_row += 1
                    open_seg = False
            else:
                row_ids[i] = n_row
                open_seg = True
        if open_seg:
            n_row += 1
    n_col = 0
    for c in range(w):
        open_seg = False
        for r in range(h):
            i = r * w + c
            if cells[i].is_black():
                if open_seg:
                    n_col += 1
                    open_seg = False
            else:
                col_ids[i] = n_col
                open_seg = True
        if open_seg:
            n_col += 1
    return row_ids, col_ids, n_row, n_col


def _lit_flags(board: Board) -> list[bool]:
    """Whether each cell is lit by at least one bulb (bulbs light themselves)."""
    row_ids, col_ids, n_row, n_col = _segments(board)
    row_has = [False] * n_row
    col_has = [False] * n_col
    for i, code in enumerate(board.cells):
        if code is Cell.BULB:
            row_has[row_ids[i]] = True
            col_has[col_ids[i]] = True
    return [
        row_ids[i] >= 0 and (row_has[row_ids[i]] or col_has[col_ids[i]])
        for i in range(len(board.cells))
    ]


def illuminate(board: Board) -> Board:
    """Recompute the lit marks: every white cell becomes 8 if a bulb
    reaches it and 6 otherwise.  Bulbs, forbidden marks and black cells
    are left alone.
    """
    lit = _lit_flags(board)
    cells = list(board.cells)
    for i, code in enumerate(cells):
        if code is Cell.EMPTY or code is Cell.LIT:
            cells[i] = Cell.LIT if lit[i] else Cell.EMPTY
    return Board(board.width, board.height, tuple(cells))


def count_conflicts(board: Board) -> ConflictReport:
    """Count rule violations: mutually visible bulb pairs and black
    cells whose adjacent-bulb count is off.
    """
    row_ids, col_ids, n_row, n_col = _segments(board)
    row_bulbs = [0] * n_row
    col_bulbs = [0] * n_col
    for i, code in enumerate(board.cells):
        if code is Cell.BULB:
            row_bulbs[row_ids[i]] += 1
            col_bulbs[col_ids[i]] += 1
    pairs = sum(n * (n - 1) // 2 for n in row_bulbs) + sum(
        n * (n - 1) // 2 for n in col_bulbs
    )
    violations = 0
    for pos in board.positions():
        code = board.cell(pos)
        if code.is_black():
            adjacent = sum(1 for p in board.neighbors(pos) if board.cell(p) is Cell.BULB)
            if adjacent != int(code):
                violations += 1
    return ConflictReport(bulb_pairs_shining=pairs, black_violations=violations)


def fitness(board: Board, w_pair: float = 10.0, w_black: float = 10.0) -> Fitness:
    """Score a board: 100 * lit fraction minus conflict penalties.

    The lit fraction is the share of white cells that hold a bulb or
    are reached by one; a board with no white cells counts as fully
    lit.  100.0 with the default weights means solved.
    """
    lit = _lit_flags(board)
    whites = 0
    covered = 0
    for i, code in enumerate(board.cells):
        if code.is_white():
            whites += 1
            if code is Cell.BULB or lit[i]:
                covered += 1
    lit_fraction = covered / whites if whites else 1.0
    conflicts = count_conflicts(board)
    value = (
        100.0 * lit_fraction
        - w_pair * conflicts.bulb_pairs_shining
        - w_black * conflicts.black_violations
    )
    return Fitness(value=value, lit_fraction=lit_fraction, conflicts=conflicts)


def is_solved(board: Board) -> bool:
    """True when every white cell is lit or a bulb and nothing conflicts."""
    fit = fitness(board)
    return fit.lit_fraction == 1.0 and fit.conflicts.total == 0


def search_space_size(board: Board) -> int:
    """Number of bulb subsets over the board's white cells, exactly.

    Every white cell (codes 6-9) may independently hold a bulb or not,
    so the space is 2 to the number of white cells.
    """
    whites = sum(1 for code in board.cells if code.is_white())
    return 1 << whites
