"""Initializer tests: blind random seeding and constraint propagation."""

import random

import pytest

from akari.board import Cell, Position, count_conflicts, parse_board, serialize_board
from akari.generator import GeneratorConfig, generate
from akari.initializer import UnsolvableError, optimized_init, random_init
from akari.oracle import solve_exact


def bulb_positions(board):
    return {p for p in board.positions() if board.cell(p) is Cell.BULB}


def test_random_init_forced_by_counts():
    b = parse_board("666\n646\n666")
    for seed in range(10):
        out = random_init(b, seed)
        assert bulb_positions(out) == {
            Position(0, 1),
            Position(1, 0),
            Position(1, 2),
            Position(2, 1),
        }


def test_random_init_all_black_unchanged():
    b = parse_board("00\n00")
    assert random_init(b, 3) == b


def test_random_init_shared_neighbor_bound():
    # two black-ones share their only candidate, so one bulb serves both
    b = parse_board("161")
    for seed in range(20):
        out = random_init(b, seed)
        assert bulb_positions(out) == {Position(0, 1)}


def test_random_init_legality_and_determinism():
    rng = random.Random(0x1217)
    for _ in range(40):
        w, h = rng.randint(2, 8), rng.randint(2, 8)
        board = generate(
            GeneratorConfig(
                width=w,
                height=h,
                black_count=rng.randint(0, w * h),
                seed=rng.getrandbits(64),
            )
        )
        seed = rng.getrandbits(64)
        out = random_init(board, seed)
        assert out == random_init(board, seed)
        for pos in board.positions():
            before, after = board.cell(pos), out.cell(pos)
            if before.is_black() or before is Cell.FORBIDDEN:
                assert after is before
            else:
                assert after in (Cell.EMPTY, Cell.BULB)


def test_random_init_rejects_boards_with_bulbs():
    with pytest.raises(ValueError):
        random_init(parse_board("76"), 0)


def test_optimized_init_black_zero_marks():
    assert serialize_board(optimized_init(parse_board("06"))) == "09"


def test_optimized_init_forced_full():
    out = optimized_init(parse_board("636\n666\n666"))
    assert bulb_positions(out) == {Position(0, 0), Position(0, 2), Position(1, 1)}


def test_optimized_init_force_then_mark():
    # corner black-two forces both neighbors; the satisfied black-one
    # then rules out its remaining neighbor
    b = parse_board("261\n666\n666")
    out = optimized_init(b)
    assert bulb_positions(out) == {Position(0, 1), Position(1, 0)}
    assert out.cell(Position(1, 2)) is Cell.FORBIDDEN
    # cross-check against the oracle: the forced bulbs appear in every
    # solution and the marked cell in none
    solutions = solve_exact(b).solutions
    assert solutions
    for sol in solutions:
        assert {Position(0, 1), Position(1, 0)} <= bulb_positions(sol)
        assert Position(1, 2) not in bulb_positions(sol)


def test_optimized_init_contradiction():
    with pytest.raises(UnsolvableError):
        optimized_init(parse_board("06\n64"))
    with pytest.raises(UnsolvableError):
        optimized_init(parse_board("56"))


def test_optimized_init_idempotent_and_sound():
    rng = random.Random(0x0F1)
    for _ in range(30):
        board = generate(
            GeneratorConfig(
                width=rng.randint(3, 7),
                height=rng.randint(3, 7),
                black_count=rng.randint(2, 10),
                seed=rng.getrandbits(64),
            )
        )
        out = optimized_init(board)
        assert optimized_init(out) == out
        # never introduces a conflict on a solvable board
        report = count_conflicts(out)
        assert report.bulb_pairs_shining == 0
        for pos in out.positions():
            code = out.cell(pos)
            if code.is_black():
                have = sum(
                    1 for p in out.neighbors(pos) if out.cell(p) is Cell.BULB
                )
                assert have <= int(code)
        # and the board stays solvable
        assert solve_exact(out, cap=1).solutions
