"""Benchmark tables and figures."""

from __future__ import annotations

import math
import statistics
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

BASE_COLUMNS = ("instance", "algo", "slots", "words", "shared", "weight", "candidates")


def tsv_header(repeat: int) -> str:
    return "\t".join(BASE_COLUMNS + tuple(f"time_{r + 1}" for r in range(repeat)))


def tsv_row(row: dict, repeat: int) -> str:
    cells = [str(row[c]) for c in BASE_COLUMNS]
    cells += [f"{t:.6f}" for t in row["times"][:repeat]]
    return "\t".join(cells)


def write_table(rows: Sequence[dict], repeat: int) -> str:
    return "\n".join([tsv_header(repeat)] + [tsv_row(r, repeat) for r in rows]) + "\n"


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    return statistics.linear_regression(lx, ly).slope


def plot_bench(rows: Sequence[dict], path: Path) -> Path:
    """Candidate counts and median times per instance, log scale."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    names = [r["instance"] for r in rows]
    xs = range(len(rows))
    if rows:
        ax1.bar(xs, [max(r["candidates"], 1) for r in rows], color="tab:blue")
        ax2.bar(xs, [statistics.median(r["times"]) if r["times"] else 0.0 for r in rows], color="tab:orange")
        for ax in (ax1, ax2):
            ax.set_xticks(list(xs))
            ax.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
        ax1.set_yscale("log")
    ax1.set_ylabel("candidates")
    ax2.set_ylabel("median seconds")
    ax1.set_title("enumerated candidates")
    ax2.set_title("wall time")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def plot_growth(ms: Sequence[int], counts: Sequence[int], path: Path) -> Path:
    """Log-log plot of counts against m+1 with the fitted slope in the title."""
    fig, ax = plt.subplots(figsize=(5, 4))
    xs = [m + 1 for m in ms]
    ax.loglog(xs, counts, "o-", label="measured")
    if len(xs) >= 2:
        slope = loglog_slope(xs, counts)
        ax.set_title(f"slope {slope:.3f}")
    ax.set_xlabel("m + 1")
    ax.set_ylabel("DP table entries")
    ax.legend()
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path
