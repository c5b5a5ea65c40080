"""Local search: neighborhood sampling, hill climbing, simulated annealing.

Candidate moves are sampled uniformly over every applicable move of the
permitted kinds: one add per bulb-free white cell, one remove per bulb,
and (with three actions) one relocation per bulb/empty-cell pair.
Forbidden cells (9) are never targets.

Fitness is evaluated incrementally.  The engine tracks per-segment bulb
counts, per-cell lit degrees, and per-black-cell adjacency counts, so
scoring a candidate costs a couple of segment walks instead of a full
board scan; that is what makes 100,000-evaluation budgets cheap even at
16x16.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from enum import Enum

from akari.board import Board, Cell, Fitness, Position, fitness, illuminate
from akari.board import _segments
from akari.initializer import InitMode, optimized_init, random_init


class Algorithm(Enum):
    HILL_CLIMB = "hill_climb"
    SIMULATED_ANNEALING = "simulated_annealing"


class ActionSet(Enum):
    TWO_ACTIONS = "two_actions"
    THREE_ACTIONS = "three_actions"


class MoveKind(Enum):
    ADD = "add"
    REMOVE = "remove"
    MOVE = "move"


@dataclass(frozen=True)
class Move:
    """add carries only target, remove only source, move carries both."""

    kind: MoveKind
    source: Position | None
    target: Position | None


@dataclass(frozen=True)
class SearchConfig:
    algorithm: Algorithm
    actions: ActionSet = ActionSet.THREE_ACTIONS
    init: InitMode = InitMode.RANDOM_NORMAL
    max_evaluations: int = 100000
    neighbors_per_step: int = 20
    t0: float = 5.0
    cooling_alpha: float = 0.999
    w_pair: float = 10.0
    w_black: float = 10.0
    stall_rounds: int = 50
    seed: int = 0


@dataclass(frozen=True)
class RunRecord:
    final_board: Board
    final_fitness: Fitness
    lit_percent: float
    conflicts: int
    evaluations_used: int
    wall_time_ms: int
    solved: bool
    seed: int


def _validate_config(cfg: SearchConfig) -> None:
    if cfg.max_evaluations < 1:
        raise ValueError("max_evaluations must be positive")
    if cfg.neighbors_per_step < 1:
        raise ValueError("neighbors_per_step must be positive")
    if cfg.t0 <= 0:
        raise ValueError("t0 must be positive")
    if not 0.0 < cfg.cooling_alpha < 1.0:
        raise ValueError("cooling_alpha must lie in (0, 1)")
    if cfg.w_pair <= 0 or cfg.w_black <= 0:
        raise ValueError("penalty weights must be positive")
    if cfg.stall_rounds < 1:
        raise ValueError("stall_rounds must be positive")
    if not 0 <= cfg.seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")


def _sample_moves(
    rng: random.Random,
    k: int,
    empties: list[int],
    bulbs: list[int],
    actions: ActionSet,
) -> list[tuple[MoveKind, int, int]]:
    """k draws, uniform over the full applicable-move set, repeats allowed."""
    n_add = len(empties)
    n_rem = len(bulbs)
    n_mov = n_rem * n_add if actions is ActionSet.THREE_ACTIONS else 0
    total = n_add + n_rem + n_mov
    if total == 0:
        return []
    out = []
    for _ in range(k):
        u = rng.randrange(total)
        if u < n_add:
            out.append((MoveKind.ADD, -1, empties[u]))
        elif u < n_add + n_rem:
            out.append((MoveKind.REMOVE, bulbs[u - n_add], -1))
        else:
            v = u - n_add - n_rem
            out.append((MoveKind.MOVE, bulbs[v // n_add], empties[v % n_add]))
    return out


class _Engine:
    """Mutable incremental fitness state over a fixed black layout.

    A cell is lit iff its lit degree (number of bulbs sharing one of
    its two segments, counting a bulb on the cell twice) is positive.
    Adding a bulb to a segment already holding n bulbs creates exactly
    n new shining pairs.
    """

    def __init__(self, board: Board, w_pair: float, w_black: float):
        self.base = board
        self.w_pair = w_pair
        self.w_black = w_black
        cells = board.cells
        n = len(cells)
        row_ids, col_ids, n_row, n_col = _segments(board)
        self.rseg = row_ids
        self.cseg = [(-1 if s < 0 else n_row + s) for s in col_ids]
        members: list[list[int]] = [[] for _ in range(n_row + n_col)]
        for i, code in enumerate(cells):
            if code.is_white():
                members[self.rseg[i]].append(i)
                members[self.cseg[i]].append(i)
        self.seg_members = members
        self.seg_bulbs = [0] * (n_row + n_col)
        self.whites = sum(1 for code in cells if code.is_white())
        self.deg = [0] * n
        self.lit_count = 0
        self.pairs = 0

        self.need: list[int] = []
        self.cell_blacks: list[list[int]] = [[] for _ in range(n)]
        w = board.width
        for i, code in enumerate(cells):
            if code.is_black():
                b = len(self.need)
                self.need.append(int(code))
                r, c = divmod(i, w)
                for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if 0 <= rr < board.height and 0 <= cc < w:
                        j = rr * w + cc
                        if cells[j].is_white():
                            self.cell_blacks[j].append(b)
        self.b_have = [0] * len(self.need)
        self.viol = sum(1 for v in self.need if v != 0)

        self.is_bulb = bytearray(n)
        self.empty_list: list[int] = []
        self.empty_pos: dict[int, int] = {}
        self.bulb_list: list[int] = []
        self.bulb_pos: dict[int, int] = {}
        for i, code in enumerate(cells):
            if code is Cell.EMPTY or code is Cell.LIT or code is Cell.BULB:
                self.empty_pos[i] = len(self.empty_list)
                self.empty_list.append(i)
        for i, code in enumerate(cells):
            if code is Cell.BULB:
                self.commit(MoveKind.ADD, -1, i)

    def _add(self, t: int) -> None:
        rs, cs = self.rseg[t], self.cseg[t]
        seg_bulbs = self.seg_bulbs
        self.pairs += seg_bulbs[rs] + seg_bulbs[cs]
        seg_bulbs[rs] += 1
        seg_bulbs[cs] += 1
        deg = self.deg
        for j in self.seg_members[rs]:
            if deg[j] == 0:
                self.lit_count += 1
            deg[j] += 1
        for j in self.seg_members[cs]:
            if deg[j] == 0:
                self.lit_count += 1
            deg[j] += 1
        need, have = self.need, self.b_have
        for b in self.cell_blacks[t]:
            h = have[b]
            if h == need[b]:
                self.viol += 1
            elif h + 1 == need[b]:
                self.viol -= 1
            have[b] = h + 1
        self.is_bulb[t] = 1

    def _remove(self, s: int) -> None:
        rs, cs = self.rseg[s], self.cseg[s]
        seg_bulbs = self.seg_bulbs
        seg_bulbs[rs] -= 1
        seg_bulbs[cs] -= 1
        self.pairs -= seg_bulbs[rs] + seg_bulbs[cs]
        deg = self.deg
        for j in self.seg_members[rs]:
            deg[j] -= 1
            if deg[j] == 0:
                self.lit_count -= 1
        for j in self.seg_members[cs]:
            deg[j] -= 1
            if deg[j] == 0:
                self.lit_count -= 1
        need, have = self.need, self.b_have
        for b in self.cell_blacks[s]:
            h = have[b]
            if h == need[b]:
                self.viol += 1
            elif h - 1 == need[b]:
                self.viol -= 1
            have[b] = h - 1
        self.is_bulb[s] = 0

    def value(self) -> float:
        lit_term = 100.0 * self.lit_count / self.whites if self.whites else 100.0
        return lit_term - self.w_pair * self.pairs - self.w_black * self.viol

    def solved(self) -> bool:
        return self.lit_count == self.whites and self.pairs == 0 and self.viol == 0

    def peek(self, kind: MoveKind, src: int, dst: int) -> float:
        """Value after the move, with the move rolled back."""
        if kind is MoveKind.ADD:
            self._add(dst)
            v = self.value()
            self._remove(dst)
        elif kind is MoveKind.REMOVE:
            self._remove(src)
            v = self.value()
            self._add(src)
        else:
            self._remove(src)
            self._add(dst)
            v = self.value()
            self._remove(dst)
            self._add(src)
        return v

    def commit(self, kind: MoveKind, src: int, dst: int) -> None:
        if kind is not MoveKind.REMOVE:
            self._pop(self.empty_list, self.empty_pos, dst)
            self._push(self.bulb_list, self.bulb_pos, dst)
            self._add(dst)
        if kind is not MoveKind.ADD:
            self._pop(self.bulb_list, self.bulb_pos, src)
            self._push(self.empty_list, self.empty_pos, src)
            self._remove(src)

    @staticmethod
    def _push(lst: list[int], pos: dict[int, int], i: int) -> None:
        pos[i] = len(lst)
        lst.append(i)

    @staticmethod
    def _pop(lst: list[int], pos: dict[int, int], i: int) -> None:
        k = pos.pop(i)
        last = lst.pop()
        if last != i:
            lst[k] = last
            pos[last] = k

    def board_with_bulbs(self, bulbs: list[int]) -> Board:
        cells = list(self.base.cells)
        bulb_set = set(bulbs)
        for i, code in enumerate(cells):
            if code is Cell.BULB or code is Cell.LIT:
                cells[i] = Cell.EMPTY
        for i in bulb_set:
            cells[i] = Cell.BULB
        return illuminate(Board(self.base.width, self.base.height, tuple(cells)))


def neighbors(
    board: Board, actions: ActionSet, k: int, seed: int
) -> list[tuple[Move, Board]]:
    """k sampled neighbor boards of `board`, with the moves that made them."""
    if k < 1:
        raise ValueError("k must be positive")
    rng = random.Random(seed)
    empties = [
        i for i, code in enumerate(board.cells) if code in (Cell.EMPTY, Cell.LIT)
    ]
    bulbs = [i for i, code in enumerate(board.cells) if code is Cell.BULB]
    out = []
    w = board.width
    for kind, src, dst in _sample_moves(rng, k, empties, bulbs, actions):
        cells = list(board.cells)
        if kind is not MoveKind.ADD:
            cells[src] = Cell.EMPTY
        if kind is not MoveKind.REMOVE:
            cells[dst] = Cell.BULB
        move = Move(
            kind=kind,
            source=Position(*divmod(src, w)) if kind is not MoveKind.ADD else None,
            target=Position(*divmod(dst, w)) if kind is not MoveKind.REMOVE else None,
        )
        out.append((move, Board(board.width, board.height, tuple(cells))))
    return out


def _run(board: Board, cfg: SearchConfig) -> RunRecord:
    _validate_config(cfg)
    t_start = time.perf_counter()
    rng = random.Random(cfg.seed)

    work = board
    if not any(code is Cell.BULB for code in board.cells):
        if cfg.init is InitMode.RANDOM_NORMAL:
            work = random_init(board, rng.getrandbits(64))
        else:
            work = optimized_init(board)

    engine = _Engine(work, cfg.w_pair, cfg.w_black)
    evals = 1
    current = engine.value()
    best_val = current
    best_bulbs = list(engine.bulb_list)
    step = 0
    stall = 0

    while not engine.solved() and evals < cfg.max_evaluations:
        k = min(cfg.neighbors_per_step, cfg.max_evaluations - evals)
        moves = _sample_moves(rng, k, engine.empty_list, engine.bulb_list, cfg.actions)
        if not moves:
            break
        cand = moves[0]
        cand_val = -math.inf
        for m in moves:
            v = engine.peek(*m)
            evals += 1
            if v > cand_val:
                cand_val = v
                cand = m
        take = cand_val > current
        if take:
            stall = 0
        elif cfg.algorithm is Algorithm.HILL_CLIMB:
            stall += 1
            if stall >= cfg.stall_rounds:
                break
        else:
            temp = cfg.t0 * cfg.cooling_alpha**step
            take = rng.random() < math.exp((cand_val - current) / temp)
        if take:
            engine.commit(*cand)
            current = cand_val
            if current > best_val:
                best_val = current
                best_bulbs = list(engine.bulb_list)
        step += 1

    final_board = engine.board_with_bulbs(best_bulbs)
    final_fitness = fitness(final_board, cfg.w_pair, cfg.w_black)
    conflicts = final_fitness.conflicts.total
    return RunRecord(
        final_board=final_board,
        final_fitness=final_fitness,
        lit_percent=100.0 * final_fitness.lit_fraction,
        conflicts=conflicts,
        evaluations_used=evals,
        wall_time_ms=int((time.perf_counter() - t_start) * 1000),
        solved=final_fitness.lit_fraction == 1.0 and conflicts == 0,
        seed=cfg.seed,
    )


def hill_climb(board: Board, cfg: SearchConfig) -> RunRecord:
    """Best-of-sample ascent; stops on budget, solution, or stall."""
    if cfg.algorithm is not Algorithm.HILL_CLIMB:
        raise ValueError("config.algorithm must be hill_climb")
    return _run(board, cfg)


def simulated_annealing(board: Board, cfg: SearchConfig) -> RunRecord:
    """Same loop, but a non-improving best neighbor is still accepted
    with probability exp(delta/T) under the geometric schedule
    T = t0 * alpha^step."""
    if cfg.algorithm is not Algorithm.SIMULATED_ANNEALING:
        raise ValueError("config.algorithm must be simulated_annealing")
    return _run(board, cfg)
