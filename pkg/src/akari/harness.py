"""Benchmark, sweep, and dataset protocols behind the CLI.

Every run's seed derives from the master seed, the solver name, and the
board index through SHA-256, so a single run can be reproduced in
isolation and adding a solver never shifts anyone else's seeds.  Runs
are dispatched to a process pool (capped by the AKARI_THREADS
environment variable) and collected in submission order, so parallelism
never changes report content.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from akari.board import Board, serialize_board
from akari.generator import GenerationMode, GeneratorConfig, generate
from akari.initializer import InitMode
from akari.search import (
    ActionSet,
    Algorithm,
    RunRecord,
    SearchConfig,
    hill_climb,
    simulated_annealing,
)
from akari.stats import TestResult, compare_samples


def derive_seed(master: int, *parts: object) -> int:
    """Stable 64-bit seed from the master seed plus context labels."""
    text = "|".join([str(master), *(str(p) for p in parts)])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def resolve_workers(requested: int | None) -> int:
    """Worker count: the request (or CPU count), capped by AKARI_THREADS."""
    workers = requested if requested is not None else (os.cpu_count() or 1)
    cap = os.environ.get("AKARI_THREADS")
    if cap:
        workers = min(workers, max(1, int(cap)))
    return max(1, workers)


@dataclass(frozen=True)
class SolverSpec:
    name: str
    algorithm: Algorithm
    actions: ActionSet = ActionSet.THREE_ACTIONS
    init: InitMode = InitMode.RANDOM_NORMAL


def default_solvers() -> tuple[SolverSpec, ...]:
    """The three baselines compared in the 7x7 protocol."""
    return (
        SolverSpec("vanilla-hc", Algorithm.HILL_CLIMB, init=InitMode.RANDOM_NORMAL),
        SolverSpec("optimized-hc", Algorithm.HILL_CLIMB, init=InitMode.OPTIMIZED),
        SolverSpec("sa", Algorithm.SIMULATED_ANNEALING, init=InitMode.RANDOM_NORMAL),
    )


@dataclass(frozen=True)
class BenchmarkConfig:
    width: int = 7
    height: int = 7
    black_count: int = 12
    boards: int = 30
    mode: GenerationMode = GenerationMode.SOLUTION_FIRST
    numbered_fraction: float = 0.5
    solvers: tuple[SolverSpec, ...] = field(default_factory=default_solvers)
    max_evaluations: int = 100000
    neighbors_per_step: int = 20
    t0: float = 5.0
    cooling_alpha: float = 0.999
    w_pair: float = 10.0
    w_black: float = 10.0
    stall_rounds: int = 50
    seed: int = 0
    workers: int | None = None


@dataclass(frozen=True)
class BenchmarkRun:
    solver: str
    board_index: int
    record: RunRecord


@dataclass(frozen=True)
class AggregateRow:
    solver: str
    runs: int
    mean_lit_percent: float
    var_lit_percent: float | None
    mean_fitness: float
    var_fitness: float | None
    solve_rate: float
    mean_evaluations: float
    mean_wall_time_ms: float


@dataclass(frozen=True)
class PairwiseTest:
    metric: str
    solver_a: str
    solver_b: str
    f: TestResult | None
    t: TestResult


@dataclass(frozen=True)
class BenchmarkReport:
    config: dict
    boards: list[str]
    runs: list[BenchmarkRun]
    aggregates: list[AggregateRow]
    tests: list[PairwiseTest]


def make_boards(cfg: BenchmarkConfig) -> list[Board]:
    return [
        generate(
            GeneratorConfig(
                width=cfg.width,
                height=cfg.height,
                black_count=cfg.black_count,
                mode=cfg.mode,
                numbered_fraction=cfg.numbered_fraction,
                seed=derive_seed(cfg.seed, "board", i),
            )
        )
        for i in range(cfg.boards)
    ]


def _search_config(cfg: BenchmarkConfig, spec: SolverSpec, seed: int) -> SearchConfig:
    return SearchConfig(
        algorithm=spec.algorithm,
        actions=spec.actions,
        init=spec.init,
        max_evaluations=cfg.max_evaluations,
        neighbors_per_step=cfg.neighbors_per_step,
        t0=cfg.t0,
        cooling_alpha=cfg.cooling_alpha,
        w_pair=cfg.w_pair,
        w_black=cfg.w_black,
        stall_rounds=cfg.stall_rounds,
        seed=seed,
    )


def _run_one(task: tuple[Board, SearchConfig]) -> RunRecord:
    board, cfg = task
    if cfg.algorithm is Algorithm.HILL_CLIMB:
        return hill_climb(board, cfg)
    return simulated_annealing(board, cfg)


def execute_runs(
    tasks: list[tuple[Board, SearchConfig]], workers: int | None
) -> list[RunRecord]:
    """Run every task, in order; a pool of one stays in-process."""
    n = resolve_workers(workers)
    if n <= 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_run_one, tasks))


def _config_echo(cfg) -> dict:
    out = {}
    for key, value in vars(cfg).items():
        if isinstance(value, tuple) and value and isinstance(value[0], SolverSpec):
            out[key] = [
                {
                    "name": s.name,
                    "algorithm": s.algorithm.value,
                    "actions": s.actions.value,
                    "init": s.init.value,
                }
                for s in value
            ]
        elif hasattr(value, "value"):
            out[key] = value.value
        else:
            out[key] = value
    return out


def benchmark(cfg: BenchmarkConfig) -> BenchmarkReport:
    """Generate one board suite and run every configured solver on it."""
    boards = make_boards(cfg)
    keys = []
    tasks = []
    for spec in cfg.solvers:
        for i, board in enumerate(boards):
            seed = derive_seed(cfg.seed, spec.name, i)
            keys.append((spec.name, i))
            tasks.append((board, _search_config(cfg, spec, seed)))
    records = execute_runs(tasks, cfg.workers)
    runs = [
        BenchmarkRun(solver=name, board_index=i, record=rec)
        for (name, i), rec in zip(keys, records)
    ]

    aggregates = []
    by_solver: dict[str, list[RunRecord]] = {s.name: [] for s in cfg.solvers}
    for run in runs:
        by_solver[run.solver].append(run.record)
    for spec in cfg.solvers:
        recs = by_solver[spec.name]
        lits = [r.lit_percent for r in recs]
        fits = [r.final_fitness.value for r in recs]
        aggregates.append(
            AggregateRow(
                solver=spec.name,
                runs=len(recs),
                mean_lit_percent=statistics.mean(lits),
                var_lit_percent=statistics.variance(lits) if len(lits) > 1 else None,
                mean_fitness=statistics.mean(fits),
                var_fitness=statistics.variance(fits) if len(fits) > 1 else None,
                solve_rate=sum(r.solved for r in recs) / len(recs),
                mean_evaluations=statistics.mean(r.evaluations_used for r in recs),
                mean_wall_time_ms=statistics.mean(r.wall_time_ms for r in recs),
            )
        )

    tests: list[PairwiseTest] = []
    if len(boards) >= 2:
        metrics = (
            ("lit_percent", lambda r: r.lit_percent),
            ("fitness_value", lambda r: r.final_fitness.value),
        )
        for metric, getter in metrics:
            for spec_a, spec_b in combinations(cfg.solvers, 2):
                sample_a = [getter(r) for r in by_solver[spec_a.name]]
                sample_b = [getter(r) for r in by_solver[spec_b.name]]
                f_res, t_res = compare_samples(sample_a, sample_b)
                tests.append(
                    PairwiseTest(
                        metric=metric,
                        solver_a=spec_a.name,
                        solver_b=spec_b.name,
                        f=f_res,
                        t=t_res,
                    )
                )

    return BenchmarkReport(
        config=_config_echo(cfg),
        boards=[serialize_board(b) for b in boards],
        runs=runs,
        aggregates=aggregates,
        tests=tests,
    )


@dataclass(frozen=True)
class SweepConfig:
    width: int = 7
    height: int = 7
    black_count: int = 12
    boards: int = 30
    mode: GenerationMode = GenerationMode.SOLUTION_FIRST
    numbered_fraction: float = 0.5
    t0_values: tuple[float, ...] = (5.0,)
    alpha_values: tuple[float, ...] = (0.999,)
    actions: ActionSet = ActionSet.THREE_ACTIONS
    init: InitMode = InitMode.RANDOM_NORMAL
    max_evaluations: int = 100000
    neighbors_per_step: int = 20
    w_pair: float = 10.0
    w_black: float = 10.0
    stall_rounds: int = 50
    seed: int = 0
    workers: int | None = None


@dataclass(frozen=True)
class SweepRow:
    t0: float
    alpha: float
    mean_fitness: float
    solve_rate: float


def sweep_run_seeds(cfg: SweepConfig) -> list[int]:
    """One seed per board, shared by every grid cell so cells differ
    only in their schedule parameters."""
    return [derive_seed(cfg.seed, "sweep", i) for i in range(cfg.boards)]


def sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Full-factorial t0 x alpha sweep of simulated annealing."""
    boards = make_boards(
        BenchmarkConfig(
            width=cfg.width,
            height=cfg.height,
            black_count=cfg.black_count,
            boards=cfg.boards,
            mode=cfg.mode,
            numbered_fraction=cfg.numbered_fraction,
            seed=cfg.seed,
        )
    )
    seeds = sweep_run_seeds(cfg)
    rows = []
    for t0 in cfg.t0_values:
        for alpha in cfg.alpha_values:
            tasks = [
                (
                    board,
                    SearchConfig(
                        algorithm=Algorithm.SIMULATED_ANNEALING,
                        actions=cfg.actions,
                        init=cfg.init,
                        max_evaluations=cfg.max_evaluations,
                        neighbors_per_step=cfg.neighbors_per_step,
                        t0=t0,
                        cooling_alpha=alpha,
                        w_pair=cfg.w_pair,
                        w_black=cfg.w_black,
                        stall_rounds=cfg.stall_rounds,
                        seed=seed,
                    ),
                )
                for board, seed in zip(boards, seeds)
            ]
            records = execute_runs(tasks, cfg.workers)
            rows.append(
                SweepRow(
                    t0=t0,
                    alpha=alpha,
                    mean_fitness=statistics.mean(
                        r.final_fitness.value for r in records
                    ),
                    solve_rate=sum(r.solved for r in records) / len(records),
                )
            )
    return rows


@dataclass(frozen=True)
class DatasetConfig:
    count: int = 100
    width: int = 7
    height: int = 7
    black_count: int = 12
    mode: GenerationMode = GenerationMode.SOLUTION_FIRST
    numbered_fraction: float = 0.5
    solver: Algorithm = Algorithm.SIMULATED_ANNEALING
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
    workers: int | None = None


@dataclass(frozen=True)
class DatasetRecord:
    initial: Board
    solved: Board
    solver: Algorithm
    solved_flag: bool
    seed: int


def build_dataset(cfg: DatasetConfig) -> list[DatasetRecord]:
    """Generate boards, solve each, and pair them up for export."""
    boards = [
        generate(
            GeneratorConfig(
                width=cfg.width,
                height=cfg.height,
                black_count=cfg.black_count,
                mode=cfg.mode,
                numbered_fraction=cfg.numbered_fraction,
                seed=derive_seed(cfg.seed, "dataset-board", i),
            )
        )
        for i in range(cfg.count)
    ]
    seeds = [derive_seed(cfg.seed, "dataset-run", i) for i in range(cfg.count)]
    tasks = [
        (
            board,
            SearchConfig(
                algorithm=cfg.solver,
                actions=cfg.actions,
                init=cfg.init,
                max_evaluations=cfg.max_evaluations,
                neighbors_per_step=cfg.neighbors_per_step,
                t0=cfg.t0,
                cooling_alpha=cfg.cooling_alpha,
                w_pair=cfg.w_pair,
                w_black=cfg.w_black,
                stall_rounds=cfg.stall_rounds,
                seed=seed,
            ),
        )
        for board, seed in zip(boards, seeds)
    ]
    records = execute_runs(tasks, cfg.workers)
    return [
        DatasetRecord(
            initial=board,
            solved=rec.final_board,
            solver=cfg.solver,
            solved_flag=rec.solved,
            seed=seed,
        )
        for board, rec, seed in zip(boards, records, seeds)
    ]


def board_matrix(board: Board) -> list[list[int]]:
    w = board.width
    return [
        [int(c) for c in board.cells[r * w : (r + 1) * w]] for r in range(board.height)
    ]


def dataset_json_line(rec: DatasetRecord) -> str:
    return json.dumps(
        {
            "initial": board_matrix(rec.initial),
            "solved": board_matrix(rec.solved),
            "solver": rec.solver.value,
            "solved_flag": rec.solved_flag,
            "seed": rec.seed,
        },
        separators=(",", ":"),
    )


def _run_row(run: BenchmarkRun) -> dict:
    rec = run.record
    return {
        "solver": run.solver,
        "board_index": run.board_index,
        "seed": rec.seed,
        "fitness_value": rec.final_fitness.value,
        "lit_percent": rec.lit_percent,
        "conflicts": rec.conflicts,
        "evaluations_used": rec.evaluations_used,
        "wall_time_ms": rec.wall_time_ms,
        "solved": rec.solved,
    }


def _aggregate_row(agg: AggregateRow) -> dict:
    return {
        "solver": agg.solver,
        "runs": agg.runs,
        "mean_lit_percent": agg.mean_lit_percent,
        "var_lit_percent": agg.var_lit_percent,
        "mean_fitness": agg.mean_fitness,
        "var_fitness": agg.var_fitness,
        "solve_rate": agg.solve_rate,
        "mean_evaluations": agg.mean_evaluations,
        "mean_wall_time_ms": agg.mean_wall_time_ms,
    }


def _test_row(test: PairwiseTest) -> dict:
    row = {
        "metric": test.metric,
        "solver_a": test.solver_a,
        "solver_b": test.solver_b,
        "f_statistic": None,
        "f_df_num": None,
        "f_df_denom": None,
        "f_p_value": None,
        "t_variant": test.t.variant.value,
        "t_statistic": test.t.statistic,
        "t_df": test.t.degrees_of_freedom,
        "t_p_value": test.t.p_value,
    }
    if test.f is not None:
        row.update(
            f_statistic=test.f.statistic,
            f_df_num=test.f.degrees_of_freedom,
            f_df_denom=test.f.degrees_of_freedom_denom,
            f_p_value=test.f.p_value,
        )
    return row


def report_as_dict(report: BenchmarkReport) -> dict:
    return {
        "config": report.config,
        "boards": report.boards,
        "runs": [_run_row(r) for r in report.runs],
        "aggregates": [_aggregate_row(a) for a in report.aggregates],
        "tests": [_test_row(t) for t in report.tests],
    }


def _write_csv(path: Path, rows: list[dict]) -> None:
    if not rows:
        path.write_text("")
        return
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})


def write_benchmark_files(report: BenchmarkReport, out_dir: Path) -> list[Path]:
    """report.json plus runs/aggregates/tests CSVs with the same numbers."""
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = report_as_dict(report)
    paths = [out_dir / "report.json"]
    paths[0].write_text(json.dumps(payload, indent=2) + "\n")
    for name, rows in (
        ("runs", payload["runs"]),
        ("aggregates", payload["aggregates"]),
        ("tests", payload["tests"]),
    ):
        path = out_dir / f"{name}.csv"
        _write_csv(path, rows)
        paths.append(path)
    return paths


def write_sweep_files(
    rows: list[SweepRow], cfg: SweepConfig, out_dir: Path, fmt: str
) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    dicts = [
        {
            "t0": r.t0,
            "alpha": r.alpha,
            "mean_fitness": r.mean_fitness,
            "solve_rate": r.solve_rate,
        }
        for r in rows
    ]
    paths = []
    if fmt in ("csv", "both"):
        path = out_dir / "sweep.csv"
        _write_csv(path, dicts)
        paths.append(path)
    if fmt in ("json", "both"):
        path = out_dir / "sweep.json"
        path.write_text(
            json.dumps({"config": _config_echo(cfg), "rows": dicts}, indent=2) + "\n"
        )
        paths.append(path)
    return paths


def write_dataset_file(records: list[DatasetRecord], out_dir: Path) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / "dataset.jsonl"
    with path.open("w") as fh:
        for rec in records:
            fh.write(dataset_json_line(rec) + "\n")
    return path
