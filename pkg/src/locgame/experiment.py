"""Seeded random-tournament experiments with deterministic CSV output.

One row per (size, trial): diameter, greedy resolving-set size against the
random-tournament probe bound, the sameness range, and the oriented-4-cycle
ratio.  Rows are emitted in (size, trial) order and trial t uses seed
``seed + t``, so a config pins the CSV byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .digraph import INF, all_pairs_distances, diameter
from .families import random_tournament
from .hypergraph import greedy_vertex_cover
from .resolve import distinguisher_hypergraph
from .stats import e4c_count, sameness

CSV_COLUMNS = (
    "n", "p", "seed", "trial", "diameter", "beta_greedy",
    "k_bound", "s_min", "s_max", "e4c_ratio",
)


@dataclass(frozen=True)
class ExperimentConfig:
    sizes: tuple[int, ...]
    p: float = 0.5
    trials: int = 1
    seed: int = 0
    eps: float | None = None  # per-n default: 1 / sqrt(ln n)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.p <= 1:
            raise ValueError("p must be a probability")
        if any(n < 4 for n in self.sizes):
            raise ValueError("sizes below 4 have no 4-cycle statistics")


def probe_bound(n: int, p: float, eps: float) -> float:
    """(2+eps) ln n / ln(1/rho) with rho = p^2 + (1-p)^2; INF when rho = 1."""
    rho = p * p + (1 - p) * (1 - p)
    if rho >= 1:
        return INF
    return (2 + eps) * math.log(n) / math.log(1 / rho)


def run_experiment(config: ExperimentConfig) -> list[dict]:
    rows = []
    for n in config.sizes:
        eps = config.eps if config.eps is not None else 1 / math.sqrt(math.log(n))
        lo = 2 * (1 - eps) * config.p * (1 - config.p) * (n - 2)
        hi = (1 + eps) * (config.p ** 2 + (1 - config.p) ** 2) * (n - 2)
        for trial in range(config.trials):
            g = random_tournament(n, config.p, config.seed + trial)
            dm = all_pairs_distances(g)
            s_values = [
                sameness(g, u, v).s for u in range(n) for v in range(u + 1, n)
            ]
            in_bracket = sum(1 for s in s_values if lo <= s <= hi)
            cover = greedy_vertex_cover(distinguisher_hypergraph(g, dm))
            rows.append(
                {
                    "n": n,
                    "p": config.p,
                    "seed": config.seed,
                    "trial": trial,
                    "diameter": diameter(g, dm),
                    "beta_greedy": len(cover),
                    "k_bound": probe_bound(n, config.p, eps),
                    "s_min": min(s_values),
                    "s_max": max(s_values),
                    "e4c_ratio": e4c_count(g) / (n ** 4 / 2),
                    # diagnostics, not CSV columns
                    "s_frac_in_bracket": in_bracket / len(s_values),
                    "eps": eps,
                }
            )
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        cells = []
        for col in CSV_COLUMNS:
            value = row[col]
            if value == INF:
                cells.append("inf")
            elif isinstance(value, float):
                cells.append(f"{value:.6f}")
            else:
                cells.append(str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


_INT_COLUMNS = {"n", "seed", "trial", "diameter", "beta_greedy", "s_min", "s_max"}


def rows_from_csv(text: str) -> list[dict]:
    lines = [line for line in text.splitlines() if line]
    if not lines or tuple(lines[0].split(",")) != CSV_COLUMNS:
        raise ValueError("unexpected CSV header")
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        row = {}
        for col, cell in zip(CSV_COLUMNS, cells):
            if cell == "inf":
                row[col] = INF
            elif col in _INT_COLUMNS:
                row[col] = int(cell)
            else:
                row[col] = float(cell)
        rows.append(row)
    return rows
