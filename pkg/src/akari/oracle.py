"""Exhaustive solver for small boards.

Depth-first search over bulb placements with sound pruning.  This is
the ground truth the stochastic solvers are validated against, so the
pruning rules must never cut a branch that contains a solution:

* a second bulb in a row/column segment is a conflict,
* a black cell may never exceed its number,
* a black cell whose placed + still-possible bulbs fall short of its
  number is hopeless,
* a white cell with no bulb whose row and column segments can no
  longer receive one can never be lit.

Boards may come in with bulbs (7) and forbidden marks (9) already
placed; solutions extend the bulbs and respect the marks.
"""

from __future__ import annotations

from dataclasses import dataclass

from akari.board import Board, Cell, illuminate
from akari.board import _segments

MAX_ORACLE_WHITES = 64


class BoardTooLargeError(ValueError):
    """Board exceeds the exhaustive-search guard."""


@dataclass
class SolutionSet:
    solutions: list[Board]
    complete: bool


class _Search:
    """Mutable DFS state with trail-based undo.

    Segments are indexed 0..n_row-1 for rows and n_row.. for columns,
    so every white cell belongs to exactly two segments.
    """

    def __init__(self, board: Board):
        self.board = board
        cells = board.cells
        row_ids, col_ids, n_row, n_col = _segments(board)
        self.rseg = row_ids
        self.cseg = [(-1 if s < 0 else n_row + s) for s in col_ids]
        n_seg = n_row + n_col

        self.seg_bulbs = [0] * n_seg
        self.seg_und = [0] * n_seg
        self.seg_cells: list[list[int]] = [[] for _ in range(n_seg)]
        for i, code in enumerate(cells):
            if code.is_white():
                for s in (self.rseg[i], self.cseg[i]):
                    self.seg_und[s] += 1
                    self.seg_cells[s].append(i)

        self.need: list[int] = []
        self.black_adj: list[list[int]] = []
        self.cell_blacks: list[list[int]] = [[] for _ in range(len(cells))]
        w = board.width
        for i, code in enumerate(cells):
            if not code.is_black():
                continue
            b = len(self.need)
            self.need.append(int(code))
            adj = []
            r, c = divmod(i, w)
            for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if 0 <= rr < board.height and 0 <= cc < w:
                    j = rr * w + cc
                    if cells[j].is_white():
                        adj.append(j)
                        self.cell_blacks[j].append(b)
            self.black_adj.append(adj)
        self.b_bulbs = [0] * len(self.need)
        self.b_und = [len(adj) for adj in self.black_adj]

        # -1 undecided, 0 no bulb, 1 bulb
        self.dec = [-1] * len(cells)

    def decide(self, i: int, bulb: bool) -> tuple[bool, list]:
        """Commit one cell; returns (still consistent, undo trail)."""
        trail: list[tuple[str, int]] = [("d", i)]
        self.dec[i] = 1 if bulb else 0
        ok = True
        for s in (self.rseg[i], self.cseg[i]):
            self.seg_und[s] -= 1
            trail.append(("u", s))
            if bulb:
                if self.seg_bulbs[s] >= 1:
                    ok = False
                self.seg_bulbs[s] += 1
                trail.append(("b", s))
            elif self.seg_bulbs[s] == 0 and self.seg_und[s] == 0:
                if not self._dead_segment_ok(s):
                    ok = False
        for b in self.cell_blacks[i]:
            self.b_und[b] -= 1
            trail.append(("nu", b))
            if bulb:
                self.b_bulbs[b] += 1
                trail.append(("nb", b))
                if self.b_bulbs[b] > self.need[b]:
                    ok = False
            elif self.b_bulbs[b] + self.b_und[b] < self.need[b]:
                ok = False
        return ok, trail

    def undo(self, trail: list) -> None:
        for kind, x in reversed(trail):
            if kind == "d":
                self.dec[x] = -1
            elif kind == "u":
                self.seg_und[x] += 1
            elif kind == "b":
                self.seg_bulbs[x] -= 1
            elif kind == "nu":
                self.b_und[x] += 1
            else:
                self.b_bulbs[x] -= 1

    def _dead_segment_ok(self, s: int) -> bool:
        """A segment just ran out of bulbs and candidates: every one of
        its bulb-free cells must still be reachable through its other
        segment."""
        for j in self.seg_cells[s]:
            if self.dec[j] != 0:
                continue
            o = self.cseg[j] if self.rseg[j] == s else self.rseg[j]
            if self.seg_bulbs[o] == 0 and self.seg_und[o] == 0:
                return False
        return True

    def feasible_after_install(self) -> bool:
        """Checks that pre-placed bulbs/marks left a consistent state,
        including blacks with no white neighbors at all."""
        if any(n >= 2 for n in self.seg_bulbs):
            return False
        for b, need in enumerate(self.need):
            if not self.b_bulbs[b] <= need <= self.b_bulbs[b] + self.b_und[b]:
                return False
        for s, cells in enumerate(self.seg_cells):
            if self.seg_bulbs[s] == 0 and self.seg_und[s] == 0:
                if not self._dead_segment_ok(s):
                    return False
        return True


def solve_exact(board: Board, cap: int | None = None) -> SolutionSet:
    """Find all solutions extending `board`, or the first `cap` of them.

    Refuses boards with more than MAX_ORACLE_WHITES white cells.
    """
    whites = [i for i, code in enumerate(board.cells) if code.is_white()]
    if len(whites) > MAX_ORACLE_WHITES:
        raise BoardTooLargeError(
            f"{len(whites)} white cells exceed the exhaustive limit of {MAX_ORACLE_WHITES}"
        )
    if cap is not None and cap <= 0:
        return SolutionSet(solutions=[], complete=False)

    st = _Search(board)
    open_cells = []
    for i in whites:
        code = board.cells[i]
        if code is Cell.BULB:
            ok, _ = st.decide(i, True)
            if not ok:
                return SolutionSet(solutions=[], complete=True)
        elif code is Cell.FORBIDDEN:
            ok, _ = st.decide(i, False)
            if not ok:
                return SolutionSet(solutions=[], complete=True)
        else:
            open_cells.append(i)
    if not st.feasible_after_install():
        return SolutionSet(solutions=[], complete=True)

    solutions: list[Board] = []
    capped = False

    def emit() -> None:
        cells = list(board.cells)
        for i in open_cells:
            if st.dec[i] == 1:
                cells[i] = Cell.BULB
        solutions.append(illuminate(Board(board.width, board.height, tuple(cells))))

    def dfs(k: int) -> bool:
        """Returns False once the cap is hit, to unwind the stack."""
        if k == len(open_cells):
            emit()
            return cap is None or len(solutions) < cap
        i = open_cells[k]
        for bulb in (True, False):
            ok, trail = st.decide(i, bulb)
            more = dfs(k + 1) if ok else True
            st.undo(trail)
            if not more:
                return False
        return True

    if not dfs(0):
        capped = True
    return SolutionSet(solutions=solutions, complete=not capped)


def count_solutions(board: Board) -> int:
    """Number of solutions, by exhausting solve_exact."""
    return len(solve_exact(board, cap=None).solutions)
