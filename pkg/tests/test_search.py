"""Search tests: sampling semantics, the incremental engine against
board-core fitness, and the run protocols."""

import dataclasses
import random

import pytest

from akari.board import Cell, Position, fitness, is_solved, parse_board
from akari.generator import GeneratorConfig, generate
from akari.initializer import InitMode, random_init
from akari.search import (
    ActionSet,
    Algorithm,
    Move,
    MoveKind,
    RunRecord,
    SearchConfig,
    hill_climb,
    neighbors,
    simulated_annealing,
    _Engine,
    _sample_moves,
)


def sa_config(**kw):
    return SearchConfig(algorithm=Algorithm.SIMULATED_ANNEALING, **kw)


def hc_config(**kw):
    return SearchConfig(algorithm=Algorithm.HILL_CLIMB, **kw)


def test_neighbors_all_black_is_empty():
    assert neighbors(parse_board("00\n00"), ActionSet.THREE_ACTIONS, 5, 1) == []


def test_neighbors_two_actions_on_empty_board():
    got = neighbors(parse_board("66\n66"), ActionSet.TWO_ACTIONS, 30, 2)
    assert len(got) == 30
    for move, after in got:
        assert move.kind is MoveKind.ADD
        assert move.source is None
        assert after.cell(move.target) is Cell.BULB


def test_neighbors_move_semantics():
    # one bulb, three_actions: moves must relocate that bulb onto
    # empty cells only; enumerate the legal set and check membership
    b = parse_board("766\n606\n666")
    empties = {p for p in b.positions() if b.cell(p) is Cell.EMPTY}
    got = neighbors(b, ActionSet.THREE_ACTIONS, 200, 3)
    kinds = {m.kind for m, _ in got}
    assert kinds == {MoveKind.ADD, MoveKind.REMOVE, MoveKind.MOVE}
    for move, after in got:
        if move.kind is MoveKind.MOVE:
            assert move.source == Position(0, 0)
            assert move.target in empties
            assert after.cell(move.source) is Cell.EMPTY
            assert after.cell(move.target) is Cell.BULB
        # black cells never touched
        for pos in b.positions():
            if b.cell(pos).is_black():
                assert after.cell(pos) is b.cell(pos)


def test_neighbors_never_target_forbidden():
    b = parse_board("966\n696")
    for move, after in neighbors(b, ActionSet.THREE_ACTIONS, 300, 9):
        assert move.target is None or b.cell(move.target) is not Cell.FORBIDDEN
        assert after.cell(Position(0, 0)) is Cell.FORBIDDEN


def test_sample_moves_is_uniform_over_kinds():
    # 4 empties + 2 bulbs -> 4 adds, 2 removes, 8 moves = 14 moves total
    rng = random.Random(5)
    counts = {MoveKind.ADD: 0, MoveKind.REMOVE: 0, MoveKind.MOVE: 0}
    n = 14000
    for kind, _, _ in _sample_moves(rng, n, [0, 1, 2, 3], [10, 11], ActionSet.THREE_ACTIONS):
        counts[kind] += 1
    assert abs(counts[MoveKind.ADD] / n - 4 / 14) < 0.02
    assert abs(counts[MoveKind.REMOVE] / n - 2 / 14) < 0.02
    assert abs(counts[MoveKind.MOVE] / n - 8 / 14) < 0.02


def test_engine_matches_board_core_fitness():
    # the incremental engine must agree with the plain recompute-from-
    # scratch fitness along arbitrary move trajectories
    rng = random.Random(0xE27)
    for _ in range(12):
        w, h = rng.randint(3, 8), rng.randint(3, 8)
        board = generate(
            GeneratorConfig(
                width=w, height=h, black_count=rng.randint(0, w * h // 3),
                seed=rng.getrandbits(64),
            )
        )
        work = random_init(board, rng.getrandbits(64))
        eng = _Engine(work, 10.0, 10.0)
        for _ in range(50):
            recon = eng.board_with_bulbs(eng.bulb_list)
            fit = fitness(recon)
            assert abs(eng.value() - fit.value) < 1e-9
            assert eng.pairs == fit.conflicts.bulb_pairs_shining
            assert eng.viol == fit.conflicts.black_violations
            assert eng.solved() == is_solved(recon)
            moves = _sample_moves(
                rng, 1, eng.empty_list, eng.bulb_list, ActionSet.THREE_ACTIONS
            )
            if not moves:
                break
            peeked = eng.peek(*moves[0])
            eng.commit(*moves[0])
            assert eng.value() == peeked


def test_already_solved_input_returns_immediately():
    rec = simulated_annealing(parse_board("76\n67"), sa_config(seed=4))
    assert rec.solved
    assert rec.evaluations_used == 1
    assert rec.evaluations_used <= rec_cfg_neighbors()


def rec_cfg_neighbors():
    return SearchConfig(algorithm=Algorithm.HILL_CLIMB).neighbors_per_step


def test_budget_is_exact_on_unsolvable_board():
    # a black-five can never be satisfied, so the budget runs dry
    b = parse_board("566\n666\n666")
    rec = simulated_annealing(b, sa_config(max_evaluations=37, seed=8))
    assert rec.evaluations_used == 37
    assert not rec.solved
    rec2 = hill_climb(b, hc_config(max_evaluations=10**6, stall_rounds=6, seed=8))
    assert rec2.evaluations_used < 10**6  # stalled out early
    assert not rec2.solved


def test_hill_climb_returns_best_ever_seen():
    b = generate(GeneratorConfig(width=6, height=6, black_count=8, seed=77))
    baseline = hill_climb(b, hc_config(max_evaluations=1, seed=13))
    full = hill_climb(b, hc_config(max_evaluations=10000, seed=13))
    assert full.final_fitness.value >= baseline.final_fitness.value


def test_run_determinism():
    b = generate(GeneratorConfig(width=7, height=7, black_count=12, seed=21))
    for cfg in (sa_config(seed=99), hc_config(seed=99, init=InitMode.OPTIMIZED)):
        rec1 = (
            simulated_annealing(b, cfg)
            if cfg.algorithm is Algorithm.SIMULATED_ANNEALING
            else hill_climb(b, cfg)
        )
        rec2 = (
            simulated_annealing(b, cfg)
            if cfg.algorithm is Algorithm.SIMULATED_ANNEALING
            else hill_climb(b, cfg)
        )
        for field in dataclasses.fields(RunRecord):
            if field.name == "wall_time_ms":
                continue
            assert getattr(rec1, field.name) == getattr(rec2, field.name), field.name


def test_black_cells_and_marks_survive_search():
    b = generate(GeneratorConfig(width=7, height=7, black_count=12, seed=31))
    rec = simulated_annealing(b, sa_config(seed=5, init=InitMode.OPTIMIZED))
    for pos in b.positions():
        if b.cell(pos).is_black():
            assert rec.final_board.cell(pos) is b.cell(pos)
    # forbidden marks from propagation never receive bulbs
    from akari.initializer import optimized_init

    marked = {
        p
        for p in b.positions()
        if optimized_init(b).cell(p) is Cell.FORBIDDEN
    }
    for p in marked:
        assert rec.final_board.cell(p) is not Cell.BULB


def test_solved_flag_cross_checked_with_board_core():
    for seed in range(6):
        b = generate(GeneratorConfig(width=6, height=6, black_count=9, seed=seed))
        rec = simulated_annealing(b, sa_config(seed=seed))
        assert rec.solved == is_solved(rec.final_board)
        assert rec.lit_percent == 100.0 * rec.final_fitness.lit_fraction
        assert rec.conflicts == rec.final_fitness.conflicts.total


def test_algorithm_function_guards():
    b = parse_board("66")
    with pytest.raises(ValueError):
        hill_climb(b, sa_config())
    with pytest.raises(ValueError):
        simulated_annealing(b, hc_config())


def test_config_validation():
    b = parse_board("66")
    with pytest.raises(ValueError):
        hill_climb(b, hc_config(max_evaluations=0))
    with pytest.raises(ValueError):
        hill_climb(b, hc_config(cooling_alpha=1.0))
    with pytest.raises(ValueError):
        hill_climb(b, hc_config(t0=0.0))
    with pytest.raises(ValueError):
        hill_climb(b, hc_config(seed=2**64))


def test_move_dataclass_shape():
    m = Move(kind=MoveKind.ADD, source=None, target=Position(0, 1))
    assert m.kind is MoveKind.ADD and m.source is None
