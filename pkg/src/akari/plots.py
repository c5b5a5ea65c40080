"""Report figures rendered next to the delimited output files.

The Agg backend is forced before pyplot loads so rendering works on
headless machines.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from akari.harness import BenchmarkReport, SweepRow


def benchmark_figures(report: BenchmarkReport, out_dir: Path) -> list[Path]:
    """Mean lit percentage (with sample sd) and solve rate per solver."""
    out_dir.mkdir(parents=True, exist_ok=True)
    names = [a.solver for a in report.aggregates]
    lit_means = [a.mean_lit_percent for a in report.aggregates]
    lit_sds = [
        math.sqrt(a.var_lit_percent) if a.var_lit_percent is not None else 0.0
        for a in report.aggregates
    ]
    solve_rates = [a.solve_rate for a in report.aggregates]
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, lit_means, yerr=lit_sds, capsize=4, color="#4878cf")
    ax.set_ylabel("mean lit cells (%)")
    ax.set_ylim(0, 105)
    ax.set_title("Illumination by solver")
    fig.tight_layout()
    path = out_dir / "fig_lit_percent.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(names, solve_rates, color="#6acc65")
    ax.set_ylabel("solve rate")
    ax.set_ylim(0, 1.05)
    ax.set_title("Solve rate by solver")
    fig.tight_layout()
    path = out_dir / "fig_solve_rate.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    return paths


def sweep_figures(rows: list[SweepRow], out_dir: Path) -> list[Path]:
    """Mean fitness and solve rate against t0, one line per alpha."""
    out_dir.mkdir(parents=True, exist_ok=True)
    alphas = sorted({r.alpha for r in rows})
    paths = []
    for attr, label, stem in (
        ("mean_fitness", "mean fitness", "fig_sweep_fitness"),
        ("solve_rate", "solve rate", "fig_sweep_solve_rate"),
    ):
        fig, ax = plt.subplots(figsize=(6, 4))
        for alpha in alphas:
            cells = sorted((r for r in rows if r.alpha == alpha), key=lambda r: r.t0)
            ax.plot(
                [c.t0 for c in cells],
                [getattr(c, attr) for c in cells],
                marker="o",
                label=f"alpha={alpha:g}",
            )
        if len({r.t0 for r in rows}) > 1 and min(r.t0 for r in rows) > 0:
            ax.set_xscale("log")
        ax.set_xlabel("initial temperature t0")
        ax.set_ylabel(label)
        ax.set_title(f"Annealing schedule sweep: {label}")
        ax.legend()
        fig.tight_layout()
        path = out_dir / f"{stem}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths
