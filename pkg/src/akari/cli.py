"""Command line front end: solve, benchmark, sweep, dataset, oracle."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from akari.board import BoardError, parse_board, serialize_board
from akari.generator import GenerationError
from akari.harness import (
    BenchmarkConfig,
    DatasetConfig,
    SolverSpec,
    SweepConfig,
    benchmark,
    build_dataset,
    default_solvers,
    sweep,
    write_benchmark_files,
    write_dataset_file,
    write_sweep_files,
)
from akari.initializer import InitMode, UnsolvableError
from akari.oracle import BoardTooLargeError, solve_exact
from akari.search import (
    ActionSet,
    Algorithm,
    SearchConfig,
    hill_climb,
    simulated_annealing,
)

_ALGOS = {"hc": Algorithm.HILL_CLIMB, "sa": Algorithm.SIMULATED_ANNEALING}
_ACTIONS = {"2": ActionSet.TWO_ACTIONS, "3": ActionSet.THREE_ACTIONS}
_INITS = {"random": InitMode.RANDOM_NORMAL, "optimized": InitMode.OPTIMIZED}


def _csv_list(raw: str, table: dict, flag: str) -> list:
    out = []
    for item in raw.split(","):
        item = item.strip()
        if item not in table:
            choices = ", ".join(table)
            raise argparse.ArgumentTypeError(
                f"{flag} accepts a comma list of {{{choices}}}, got {item!r}"
            )
        out.append(table[item])
    return out


def _float_list(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(item) for item in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats: {raw!r}")


def _default_blacks(width: int, height: int) -> int:
    return max(1, round(0.25 * width * height))


def _add_board_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--width", type=int, default=7, help="board width (default 7)")
    p.add_argument("--height", type=int, default=7, help="board height (default 7)")
    p.add_argument(
        "--blacks",
        type=int,
        default=None,
        help="black cell count (default: 25%% of the area)",
    )
    p.add_argument(
        "--boards", type=int, default=30, help="number of boards (default 30)"
    )


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--evals", type=int, default=100000, help="evaluation budget (default 100000)"
    )
    p.add_argument(
        "--neighbors", type=int, default=20, help="neighbors per step (default 20)"
    )
    p.add_argument("--w-pair", type=float, default=10.0, help="pair conflict weight")
    p.add_argument("--w-black", type=float, default=10.0, help="black violation weight")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")


def _add_out_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--out",
        type=Path,
        default=Path("akari-out"),
        help="output directory (default ./akari-out)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="akari",
        description="Light Up (Akari) solving, benchmarking, and dataset tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one board from a file")
    p.add_argument("board", type=Path, help="path to a board text file")
    p.add_argument("--algo", choices=sorted(_ALGOS), default="sa")
    p.add_argument("--actions", choices=sorted(_ACTIONS), default="3")
    p.add_argument("--init", choices=sorted(_INITS), default="random")
    p.add_argument("--t0", type=float, default=5.0)
    p.add_argument("--alpha", type=float, default=0.999)
    _add_search_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("benchmark", help="compare solvers on a shared board suite")
    _add_board_flags(p)
    p.add_argument(
        "--algo",
        default=None,
        help="comma list from {hc,sa}; omitted: the vanilla-hc/optimized-hc/sa trio",
    )
    p.add_argument("--actions", default="3", help="comma list from {2,3} (default 3)")
    p.add_argument(
        "--init", default="random", help="comma list from {random,optimized}"
    )
    p.add_argument("--t0", type=float, default=5.0)
    p.add_argument("--alpha", type=float, default=0.999)
    _add_search_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("sweep", help="grid sweep of annealing schedules")
    _add_board_flags(p)
    p.add_argument("--t0", type=_float_list, default=(5.0,), help="comma list of t0")
    p.add_argument(
        "--alpha", type=_float_list, default=(0.999,), help="comma list of alpha"
    )
    p.add_argument("--actions", choices=sorted(_ACTIONS), default="3")
    p.add_argument("--init", choices=sorted(_INITS), default="random")
    _add_search_flags(p)
    _add_out_flag(p)
    p.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="sweep table format (default csv)",
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dataset", help="write a JSONL puzzle/solution dataset")
    _add_board_flags(p)
    p.add_argument("--algo", choices=sorted(_ALGOS), default="sa")
    p.add_argument("--actions", choices=sorted(_ACTIONS), default="3")
    p.add_argument("--init", choices=sorted(_INITS), default="random")
    p.add_argument("--t0", type=float, default=5.0)
    p.add_argument("--alpha", type=float, default=0.999)
    _add_search_flags(p)
    _add_out_flag(p)
    p.set_defaults(func=cmd_dataset)

    p = sub.add_parser("oracle", help="count exact solutions of one board")
    p.add_argument("board", type=Path, help="path to a board text file")
    p.add_argument("--all", action="store_true", help="print every solution")
    p.add_argument("--cap", type=int, default=None, help="stop after this many")
    p.set_defaults(func=cmd_oracle)

    return parser


def cmd_solve(args: argparse.Namespace) -> int:
    board = parse_board(args.board.read_text())
    cfg = SearchConfig(
        algorithm=_ALGOS[args.algo],
        actions=_ACTIONS[args.actions],
        init=_INITS[args.init],
        max_evaluations=args.evals,
        neighbors_per_step=args.neighbors,
        t0=args.t0,
        cooling_alpha=args.alpha,
        w_pair=args.w_pair,
        w_black=args.w_black,
        seed=args.seed,
    )
    run = hill_climb if cfg.algorithm is Algorithm.HILL_CLIMB else simulated_annealing
    try:
        record = run(board, cfg)
    except UnsolvableError as exc:
        print(f"unsolvable: {exc}", file=sys.stderr)
        return 2
    print(serialize_board(record.final_board))
    status = "solved" if record.solved else "unsolved"
    print(
        f"value={record.final_fitness.value:.6g}"
        f" lit={record.lit_percent:.6g}%"
        f" conflicts={record.conflicts}"
        f" evals={record.evaluations_used}"
        f" time={record.wall_time_ms}ms"
        f" {status}"
    )
    return 0 if record.solved else 2


def _benchmark_solvers(args: argparse.Namespace) -> tuple[SolverSpec, ...]:
    if args.algo is None:
        actions = _csv_list(args.actions, _ACTIONS, "--actions")
        if len(actions) != 1:
            raise BoardError("multiple --actions values require --algo")
        if args.init != "random":
            raise BoardError("--init requires --algo; the default trio fixes it")
        return tuple(
            SolverSpec(s.name, s.algorithm, actions[0], s.init)
            for s in default_solvers()
        )
    specs = []
    for algo in _csv_list(args.algo, _ALGOS, "--algo"):
        for actions in _csv_list(args.actions, _ACTIONS, "--actions"):
            for init in _csv_list(args.init, _INITS, "--init"):
                algo_key = "hc" if algo is Algorithm.HILL_CLIMB else "sa"
                init_key = "random" if init is InitMode.RANDOM_NORMAL else "optimized"
                n_actions = "2" if actions is ActionSet.TWO_ACTIONS else "3"
                name = f"{algo_key}-{n_actions}a-{init_key}"
                specs.append(SolverSpec(name, algo, actions, init))
    return tuple(specs)


def cmd_benchmark(args: argparse.Namespace) -> int:
    blacks = args.blacks
    if blacks is None:
        blacks = _default_blacks(args.width, args.height)
    cfg = BenchmarkConfig(
        width=args.width,
        height=args.height,
        black_count=blacks,
        boards=args.boards,
        solvers=_benchmark_solvers(args),
        max_evaluations=args.evals,
        neighbors_per_step=args.neighbors,
        t0=args.t0,
        cooling_alpha=args.alpha,
        w_pair=args.w_pair,
        w_black=args.w_black,
        seed=args.seed,
    )
    report = benchmark(cfg)
    paths = write_benchmark_files(report, args.out)
    from akari.plots import benchmark_figures

    paths.extend(benchmark_figures(report, args.out))
    for agg in report.aggregates:
        print(
            f"{agg.solver}: mean_lit={agg.mean_lit_percent:.3f}%"
            f" mean_value={agg.mean_fitness:.3f}"
            f" solve_rate={agg.solve_rate:.3f}"
        )
    for path in paths:
        print(f"wrote {path}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    blacks = args.blacks
    if blacks is None:
        blacks = _default_blacks(args.width, args.height)
    cfg = SweepConfig(
        width=args.width,
        height=args.height,
        black_count=blacks,
        boards=args.boards,
        t0_values=args.t0,
        alpha_values=args.alpha,
        actions=_ACTIONS[args.actions],
        init=_INITS[args.init],
        max_evaluations=args.evals,
        neighbors_per_step=args.neighbors,
        w_pair=args.w_pair,
        w_black=args.w_black,
        seed=args.seed,
    )
    rows = sweep(cfg)
    paths = write_sweep_files(rows, cfg, args.out, args.format)
    from akari.plots import sweep_figures

    paths.extend(sweep_figures(rows, args.out))
    for row in rows:
        print(
            f"t0={row.t0:g} alpha={row.alpha:g}"
            f" mean_fitness={row.mean_fitness:.3f}"
            f" solve_rate={row.solve_rate:.3f}"
        )
    for path in paths:
        print(f"wrote {path}")
    return 0


def cmd_dataset(args: argparse.Namespace) -> int:
    blacks = args.blacks
    if blacks is None:
        blacks = _default_blacks(args.width, args.height)
    cfg = DatasetConfig(
        count=args.boards,
        width=args.width,
        height=args.height,
        black_count=blacks,
        solver=_ALGOS[args.algo],
        actions=_ACTIONS[args.actions],
        init=_INITS[args.init],
        max_evaluations=args.evals,
        neighbors_per_step=args.neighbors,
        t0=args.t0,
        cooling_alpha=args.alpha,
        w_pair=args.w_pair,
        w_black=args.w_black,
        seed=args.seed,
    )
    records = build_dataset(cfg)
    path = write_dataset_file(records, args.out)
    solved = sum(r.solved_flag for r in records)
    print(f"wrote {path} ({solved}/{len(records)} solved)")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    board = parse_board(args.board.read_text())
    result = solve_exact(board, cap=args.cap)
    suffix = "" if result.complete else " (cap reached, count is a lower bound)"
    print(f"{len(result.solutions)} solution(s){suffix}")
    if args.all:
        for solution in result.solutions:
            print()
            print(serialize_board(solution))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoardTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GenerationError, UnsolvableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
