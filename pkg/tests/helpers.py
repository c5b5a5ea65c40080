"""Shared test utilities: random board soup and naive reference oracles.

The oracles here walk rays cell by cell and compare bulb pairs
quadratically.  They share no code with the segment bookkeeping in
akari.board, which is the point.
"""

from __future__ import annotations

import random

from akari.board import Board, Cell, Position

DIRS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def random_board(
    rng: random.Random,
    width: int,
    height: int,
    p_black: float = 0.2,
    p_bulb: float = 0.1,
    p_forbidden: float = 0.05,
) -> Board:
    """Unstructured cell soup, useful for metamorphic checks."""
    cells = []
    for _ in range(width * height):
        u = rng.random()
        if u < p_black:
            cells.append(Cell(rng.randint(0, 5)))
        elif u < p_black + p_bulb:
            cells.append(Cell.BULB)
        elif u < p_black + p_bulb + p_forbidden:
            cells.append(Cell.FORBIDDEN)
        else:
            cells.append(Cell.EMPTY)
    return Board(width, height, tuple(cells))


def ray_lit_cells(board: Board) -> set[Position]:
    """Cells reached by some bulb, bulbs included, by walking each ray."""
    lit: set[Position] = set()
    for pos in board.positions():
        if board.cell(pos) is not Cell.BULB:
            continue
        lit.add(pos)
        for dr, dc in DIRS:
            r, c = pos.row + dr, pos.col + dc
            while 0 <= r < board.height and 0 <= c < board.width:
                if board.cell(Position(r, c)).is_black():
                    break
                lit.add(Position(r, c))
                r += dr
                c += dc
    return lit


def brute_force_conflicts(board: Board) -> tuple[int, int]:
    """(bulb pairs in sight, black violations) by exhaustive scanning."""
    bulbs = [p for p in board.positions() if board.cell(p) is Cell.BULB]
    pairs = 0
    for i in range(len(bulbs)):
        for j in range(i + 1, len(bulbs)):
            a, b = bulbs[i], bulbs[j]
            if a.row == b.row:
                lo, hi = sorted((a.col, b.col))
                between = (Position(a.row, c) for c in range(lo + 1, hi))
            elif a.col == b.col:
                lo, hi = sorted((a.row, b.row))
                between = (Position(r, a.col) for r in range(lo + 1, hi))
            else:
                continue
            if all(not board.cell(p).is_black() for p in between):
                pairs += 1
    violations = 0
    for pos in board.positions():
        code = board.cell(pos)
        if code.is_black():
            n = sum(1 for q in board.neighbors(pos) if board.cell(q) is Cell.BULB)
            if n != int(code):
                violations += 1
    return pairs, violations
