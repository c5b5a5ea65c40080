"""Light Up (Akari) puzzle toolkit: boards, generators, local search,
an exact solver, and a small statistics kit for comparing solvers."""

from akari.board import (
    Board,
    BoardError,
    Cell,
    ConflictReport,
    Fitness,
    Position,
    count_conflicts,
    fitness,
    illuminate,
    is_solved,
    parse_board,
    search_space_size,
    serialize_board,
)
from akari.generator import (
    GenerationError,
    GenerationMode,
    GeneratorConfig,
    generate,
)
from akari.harness import (
    BenchmarkConfig,
    BenchmarkReport,
    DatasetConfig,
    DatasetRecord,
    SolverSpec,
    SweepConfig,
    SweepRow,
    benchmark,
    build_dataset,
    derive_seed,
    sweep,
)
from akari.initializer import (
    InitMode,
    UnsolvableError,
    optimized_init,
    random_init,
)
from akari.oracle import (
    MAX_ORACLE_WHITES,
    BoardTooLargeError,
    SolutionSet,
    count_solutions,
    solve_exact,
)
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
)
from akari.stats import (
    TestResult,
    TestVariant,
    betainc,
    compare_samples,
    f_test,
    t_test,
)

__all__ = [
    "ActionSet",
    "Algorithm",
    "BenchmarkConfig",
    "BenchmarkReport",
    "Board",
    "BoardError",
    "BoardTooLargeError",
    "Cell",
    "ConflictReport",
    "DatasetConfig",
    "DatasetRecord",
    "Fitness",
    "GenerationError",
    "GenerationMode",
    "GeneratorConfig",
    "InitMode",
    "MAX_ORACLE_WHITES",
    "Move",
    "MoveKind",
    "Position",
    "RunRecord",
    "SearchConfig",
    "SolutionSet",
    "SolverSpec",
    "SweepConfig",
    "SweepRow",
    "TestResult",
    "TestVariant",
    "UnsolvableError",
    "benchmark",
    "betainc",
    "build_dataset",
    "compare_samples",
    "count_conflicts",
    "count_solutions",
    "derive_seed",
    "f_test",
    "fitness",
    "generate",
    "hill_climb",
    "illuminate",
    "is_solved",
    "neighbors",
    "optimized_init",
    "parse_board",
    "random_init",
    "search_space_size",
    "serialize_board",
    "simulated_annealing",
    "solve_exact",
    "sweep",
    "t_test",
]

__version__ = "0.1.0"
