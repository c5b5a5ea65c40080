"""Random puzzle generation.

Two modes.  `unconstrained` scatters black cells and numbers them
blindly, which may or may not leave the board solvable.
`solution_first` builds a hidden valid lighting first and reads every
black cell's number off it, so the returned puzzle always has at least
one solution.

The digit encoding has no code for a number-free black wall, so every
black cell ends up carrying a number.  `numbered_fraction` picks the
cells whose number is drawn at random in unconstrained mode; the rest
("walls") take their adjacent-bulb count under a throwaway reference
lighting, the least constraining value the encoding can express.  In
solution_first mode every number must come from the hidden solution or
the guarantee is lost, so the fraction has no effect there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from akari.board import Board, Cell
from akari.board import _segments

MAX_ATTEMPTS = 1000


class GenerationMode(Enum):
    UNCONSTRAINED = "unconstrained"
    SOLUTION_FIRST = "solution_first"


class GenerationError(RuntimeError):
    """No solvable layout found within the retry budget."""


@dataclass(frozen=True)
class GeneratorConfig:
    width: int
    height: int
    black_count: int
    mode: GenerationMode = GenerationMode.SOLUTION_FIRST
    numbered_fraction: float = 0.5
    seed: int = 0


def _validate(cfg: GeneratorConfig) -> None:
    if cfg.width <= 0 or cfg.height <= 0:
        raise ValueError(f"board size must be positive, got {cfg.width}x{cfg.height}")
    if not 0 <= cfg.black_count <= cfg.width * cfg.height:
        raise ValueError(f"black_count {cfg.black_count} not in 0..{cfg.width * cfg.height}")
    if not 0.0 <= cfg.numbered_fraction <= 1.0:
        raise ValueError(f"numbered_fraction {cfg.numbered_fraction} not in [0, 1]")
    if not 0 <= cfg.seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")


def _neighbors(i: int, width: int, height: int) -> list[int]:
    r, c = divmod(i, width)
    out = []
    if r > 0:
        out.append(i - width)
    if r + 1 < height:
        out.append(i + width)
    if c > 0:
        out.append(i - 1)
    if c + 1 < width:
        out.append(i + 1)
    return out


def _greedy_lighting(
    width: int, height: int, black_set: set[int], rng: random.Random
) -> set[int]:
    """A conflict-free bulb set lighting every white cell.

    Walk the white cells in random order and drop a bulb on any cell
    still unlit.  An unlit cell sees no bulb, so the placement can
    never create a conflict, and lighting only ever grows.
    """
    cells = tuple(
        Cell.BLACK_ZERO if i in black_set else Cell.EMPTY for i in range(width * height)
    )
    row_ids, col_ids, n_row, n_col = _segments(Board(width, height, cells))
    row_lit = [False] * n_row
    col_lit = [False] * n_col
    whites = [i for i in range(width * height) if i not in black_set]
    rng.shuffle(whites)
    bulbs: set[int] = set()
    for i in whites:
        if not (row_lit[row_ids[i]] or col_lit[col_ids[i]]):
            bulbs.add(i)
            row_lit[row_ids[i]] = True
            col_lit[col_ids[i]] = True
    return bulbs


def _lights_everything(
    width: int, height: int, black_set: set[int], bulbs: set[int]
) -> bool:
    cells = tuple(
        Cell.BLACK_ZERO if i in black_set else Cell.EMPTY for i in range(width * height)
    )
    row_ids, col_ids, n_row, n_col = _segments(Board(width, height, cells))
    row_lit = [False] * n_row
    col_lit = [False] * n_col
    for i in bulbs:
        row_lit[row_ids[i]] = True
        col_lit[col_ids[i]] = True
    return all(
        row_lit[row_ids[i]] or col_lit[col_ids[i]]
        for i in range(width * height)
        if i not in black_set
    )


def _assemble(cfg: GeneratorConfig, black_values: dict[int, int]) -> Board:
    cells = [Cell.EMPTY] * (cfg.width * cfg.height)
    for i, v in black_values.items():
        cells[i] = Cell(v)
    return Board(cfg.width, cfg.height, tuple(cells))


def generate(cfg: GeneratorConfig) -> Board:
    """Produce a puzzle board; deterministic in (cfg, cfg.seed)."""
    _validate(cfg)
    rng = random.Random(cfg.seed)
    area = cfg.width * cfg.height
    blacks = sorted(rng.sample(range(area), cfg.black_count))
    black_set = set(blacks)

    if cfg.mode is GenerationMode.SOLUTION_FIRST:
        for _ in range(MAX_ATTEMPTS):
            hidden = _greedy_lighting(cfg.width, cfg.height, black_set, rng)
            if not _lights_everything(cfg.width, cfg.height, black_set, hidden):
                continue
            values = {
                i: sum(1 for j in _neighbors(i, cfg.width, cfg.height) if j in hidden)
                for i in blacks
            }
            return _assemble(cfg, values)
        raise GenerationError(
            f"no solvable {cfg.width}x{cfg.height} layout after {MAX_ATTEMPTS} attempts"
        )

    numbered = {i for i in blacks if rng.random() < cfg.numbered_fraction}
    reference = _greedy_lighting(cfg.width, cfg.height, black_set, rng)
    values = {}
    for i in blacks:
        if i in numbered:
            free = sum(
                1 for j in _neighbors(i, cfg.width, cfg.height) if j not in black_set
            )
            values[i] = min(rng.randint(0, 4), free)
        else:
            values[i] = sum(
                1 for j in _neighbors(i, cfg.width, cfg.height) if j in reference
            )
    return _assemble(cfg, values)
