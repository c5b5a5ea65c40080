"""Starting bulb placements: blind random seeding and deterministic
constraint propagation."""

from __future__ import annotations

import random
from enum import Enum

from akari.board import Board, Cell, Position
from akari.board import _lit_flags


class InitMode(Enum):
    RANDOM_NORMAL = "random_normal"
    OPTIMIZED = "optimized"


class UnsolvableError(ValueError):
    """Constraint propagation derived a contradiction."""


def random_init(board: Board, seed: int) -> Board:
    """Blindly add bulbs to meet black-cell adjacency numbers.

    Black cells are visited in seed-shuffled order; each one draws
    random adjacent empty cells until its number is met or it runs out
    of candidates.  The result may violate other constraints.
    """
    if any(code is Cell.BULB for code in board.cells):
        raise ValueError("random_init expects a board without bulbs")
    rng = random.Random(seed)
    cells = list(board.cells)
    w = board.width
    blacks = [i for i, code in enumerate(cells) if code.is_black()]
    rng.shuffle(blacks)
    for i in blacks:
        pos = Position(*divmod(i, w))
        adjacent = list(board.neighbors(pos))
        have = sum(1 for p in adjacent if cells[p.row * w + p.col] is Cell.BULB)
        candidates = [p for p in adjacent if cells[p.row * w + p.col] is Cell.EMPTY]
        rng.shuffle(candidates)
        for p in candidates[: max(0, int(cells[i]) - have)]:
            cells[p.row * w + p.col] = Cell.BULB
    return Board(board.width, board.height, tuple(cells))


def optimized_init(board: Board) -> Board:
    """Propagate forced placements to a fixpoint.

    Two rules, repeated until neither fires:

    (a) a black cell whose remaining number equals its count of free
        adjacent cells forces bulbs onto all of them;
    (b) a black cell whose number is already met marks its remaining
        empty neighbors forbidden (code 9).

    "Free" means empty, not forbidden, and not in sight of a bulb; a
    bulb forced onto a lit cell would be an immediate conflict.  A
    black cell that can no longer reach its number raises
    UnsolvableError.  Deterministic and idempotent; accepts boards
    that already carry bulbs.
    """
    w = board.width
    cells = list(board.cells)
    blacks = [i for i, code in enumerate(cells) if code.is_black()]

    changed = True
    while changed:
        changed = False
        lit = _lit_flags(Board(board.width, board.height, tuple(cells)))
        for i in blacks:
            pos = Position(*divmod(i, w))
            adjacent = [p.row * w + p.col for p in board.neighbors(pos)]
            have = sum(1 for j in adjacent if cells[j] is Cell.BULB)
            free = [j for j in adjacent if cells[j] is Cell.EMPTY and not lit[j]]
            remaining = int(cells[i]) - have
            if remaining < 0 or remaining > len(free):
                raise UnsolvableError(
                    f"black cell at {tuple(pos)} needs {int(cells[i])} adjacent bulbs, "
                    f"has {have} with {len(free)} free cells left"
                )
            if remaining == 0:
                spare = [j for j in adjacent if cells[j] is Cell.EMPTY]
                for j in spare:
                    cells[j] = Cell.FORBIDDEN
                    changed = True
            elif remaining == len(free):
                for j in free:
                    cells[j] = Cell.BULB
                    changed = True
                break  # lit flags are stale now; restart the scan
        # rule (b) marking never stales lit flags, so no restart needed
    return Board(board.width, board.height, tuple(cells))
