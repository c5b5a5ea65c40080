"""Board-core tests: parsing, illumination, conflicts, fitness."""

import random

import pytest

from akari.board import (
    Board,
    BoardError,
    Cell,
    Position,
    count_conflicts,
    fitness,
    illuminate,
    is_solved,
    parse_board,
    search_space_size,
    serialize_board,
)
from helpers import brute_force_conflicts, random_board, ray_lit_cells

# A hand-drawn 7x7 instance in the spirit of published puzzles: a few
# numbered walls, one bulb already placed, some forbidden marks.
FIXTURE_7X7 = "\n".join(
    [
        "6660666",
        "6266696",
        "6667666",
        "0669666",
        "6666616",
        "6966366",
        "6660666",
    ]
)


def test_parse_basic():
    b = parse_board("66\n06")
    assert (b.width, b.height) == (2, 2)
    assert b.cell(Position(1, 0)) is Cell.BLACK_ZERO
    assert b.cell(Position(0, 0)) is Cell.EMPTY

    single = parse_board("7")
    assert (single.width, single.height) == (1, 1)
    assert single.cell(Position(0, 0)) is Cell.BULB


def test_parse_trailing_newline_ok():
    assert parse_board("66\n06\n") == parse_board("66\n06")


def test_parse_rejects_bad_input():
    with pytest.raises(BoardError, match="line 1, column 2"):
        parse_board("6a")
    with pytest.raises(BoardError, match="line 2"):
        parse_board("666\n66")
    with pytest.raises(BoardError, match="line 1, column 1"):
        parse_board("")
    with pytest.raises(BoardError):
        parse_board("6٣")  # arabic-indic digit three


def test_serialize_round_trip():
    assert serialize_board(parse_board("7")) == "7"
    empty = Board(3, 2, (Cell.EMPTY,) * 6)
    assert serialize_board(empty) == "666\n666"
    for text in (FIXTURE_7X7, "66\n06", "7", "012345\n678966"):
        assert serialize_board(parse_board(text)) == text


def test_illuminate_center_bulb():
    b = parse_board("666\n676\n666")
    out = illuminate(b)
    assert serialize_board(out) == "686\n878\n686"


def test_illuminate_blocked_by_black():
    out = illuminate(parse_board("706"))
    assert serialize_board(out) == "706"


def test_illuminate_recomputes_stale_marks():
    # An 8 with no bulb anywhere must revert to 6.
    out = illuminate(parse_board("86"))
    assert serialize_board(out) == "66"


def test_illuminate_matches_ray_oracle():
    rng = random.Random(0xA11)
    boards = [parse_board(FIXTURE_7X7)]
    for _ in range(300):
        w, h = rng.randint(1, 9), rng.randint(1, 9)
        boards.append(random_board(rng, w, h))
    for b in boards:
        out = illuminate(b)
        expected = ray_lit_cells(b)
        for pos in b.positions():
            code = out.cell(pos)
            if code is Cell.LIT:
                assert pos in expected
            elif code is Cell.EMPTY:
                assert pos not in expected
        # idempotence
        assert illuminate(out) == out
        # black cells and bulbs untouched
        for pos in b.positions():
            before = b.cell(pos)
            if before.is_black() or before in (Cell.BULB, Cell.FORBIDDEN):
                assert out.cell(pos) is before


def test_count_conflicts_examples():
    assert count_conflicts(parse_board("767")).bulb_pairs_shining == 1
    assert count_conflicts(parse_board("707")).bulb_pairs_shining == 0
    # black-two with exactly two adjacent bulbs: no violation
    b = parse_board("676\n627\n666")
    report = count_conflicts(b)
    assert report.black_violations == 0
    assert report.bulb_pairs_shining == 0
    assert report.total == 0


def test_count_conflicts_matches_brute_force():
    rng = random.Random(0xB0A2D)
    for _ in range(1000):
        w, h = rng.randint(1, 8), rng.randint(1, 8)
        b = random_board(rng, w, h, p_bulb=rng.uniform(0.05, 0.3))
        report = count_conflicts(b)
        pairs, violations = brute_force_conflicts(b)
        assert report.bulb_pairs_shining == pairs
        assert report.black_violations == violations
        assert report.total == pairs + violations


def test_fitness_examples():
    solved = parse_board("76\n67")
    fit = fitness(solved)
    assert fit.value == 100.0
    assert fit.conflicts.total == 0
    assert is_solved(solved)

    dark = parse_board("666\n666")
    assert fitness(dark).value == 0.0
    assert not is_solved(dark)

    # all cells lit, one bulb pair, default weight 10
    pair = parse_board("77")
    assert fitness(pair).value == 90.0

    # weights are configurable
    assert fitness(pair, w_pair=3.0, w_black=10.0).value == 97.0


def test_fitness_no_white_cells():
    b = parse_board("00\n00")
    fit = fitness(b)
    assert fit.lit_fraction == 1.0
    assert fit.value == 100.0
    assert is_solved(b)


def test_black_five_always_violates():
    b = parse_board("56")
    assert count_conflicts(b).black_violations == 1
    assert not is_solved(illuminate(parse_board("57")))


def test_forbidden_cells_must_still_be_lit():
    # the 9 is lit by the bulb, so this solves
    assert is_solved(parse_board("79"))
    # an unlit 9 blocks nothing but stays dark
    assert not is_solved(parse_board("906"))


def test_is_solved_fixture_and_near_miss():
    solved = parse_board("76\n67")
    assert is_solved(solved)
    assert not is_solved(parse_board("76\n66"))


def test_search_space_size_values():
    ten = Board(10, 10, (Cell.BLACK_ZERO,) * 25 + (Cell.EMPTY,) * 75)
    assert search_space_size(ten) == 37778931862957161709568
    assert search_space_size(parse_board("00\n00")) == 1
    assert search_space_size(parse_board("666")) == 8


def test_board_validation():
    with pytest.raises(BoardError):
        Board(0, 3, ())
    with pytest.raises(BoardError):
        Board(2, 2, (Cell.EMPTY,) * 3)
    b = parse_board("66\n66")
    with pytest.raises(BoardError):
        b.cell(Position(2, 0))
