"""A small dense two-phase primal simplex solver.

Only covering-style linear programs arise here (a few thousand nonzeros at
most), so the implementation favors clarity over sparsity: one numpy tableau,
Bland's entering/leaving rule throughout, which rules out cycling.  All
comparisons use an absolute tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TOL = 1e-9


class InfeasibleError(ValueError):
    """The constraint system admits no feasible point."""


class UnboundedError(ValueError):
    """The objective is unbounded below on the feasible region."""


@dataclass(frozen=True)
class LpSolution:
    value: float
    x: tuple[float, ...]


def solve_min_equality(c: np.ndarray, a: np.ndarray, b: np.ndarray) -> LpSolution:
    """Minimize c.x subject to a @ x = b, x >= 0 (b must be nonnegative).

    Phase 1 drives artificial variables out of the basis; phase 2 optimizes
    the real objective.
    """
    m, n = a.shape
    if np.any(b < -TOL):
        raise ValueError("right-hand side must be nonnegative")

    # tableau: [A | I_art | b], artificials start basic
    tableau = np.zeros((m, n + m + 1))
    tableau[:, :n] = a
    tableau[:, n : n + m] = np.eye(m)
    tableau[:, -1] = b
    basis = list(range(n, n + m))

    phase1_cost = np.zeros(n + m)
    phase1_cost[n:] = 1.0
    _optimize(tableau, basis, phase1_cost, allowed=n + m)
    if _objective(tableau, basis, phase1_cost) > TOL:
        raise InfeasibleError("phase-1 optimum is positive")
    _drive_out_artificials(tableau, basis, n)

    phase2_cost = np.zeros(n + m)
    phase2_cost[:n] = c
    _optimize(tableau, basis, phase2_cost, allowed=n)

    x = np.zeros(n)
    for row, var in enumerate(basis):
        if var < n:
            x[var] = tableau[row, -1]
    return LpSolution(float(phase2_cost[:n] @ x), tuple(float(v) for v in x))


def _objective(tableau: np.ndarray, basis: list[int], cost: np.ndarray) -> float:
    return float(sum(cost[var] * tableau[row, -1] for row, var in enumerate(basis)))


def _reduced_costs(tableau: np.ndarray, basis: list[int], cost: np.ndarray) -> np.ndarray:
    cb = cost[basis]
    return cost - cb @ tableau[:, :-1]


def _optimize(tableau: np.ndarray, basis: list[int], cost: np.ndarray, allowed: int) -> None:
    """Primal simplex loop with Bland's rule, restricted to columns < allowed."""
    while True:
        reduced = _reduced_costs(tableau, basis, cost)[:allowed]
        entering = -1
        for j in range(allowed):
            if reduced[j] < -TOL:
                entering = j
                break
        if entering < 0:
            return
        col = tableau[:, entering]
        best_ratio = None
        leaving = -1
        for i in range(tableau.shape[0]):
            if col[i] > TOL:
                ratio = tableau[i, -1] / col[i]
                if (
                    best_ratio is None
                    or ratio < best_ratio - TOL
                    or (abs(ratio - best_ratio) <= TOL and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            raise UnboundedError("no leaving row for entering column")
        _pivot(tableau, basis, leaving, entering)


def _pivot(tableau: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    pivot_row = tableau[row]
    for i in range(tableau.shape[0]):
        if i != row and abs(tableau[i, col]) > 0:
            tableau[i] -= tableau[i, col] * pivot_row
    basis[row] = col


def _drive_out_artificials(tableau: np.ndarray, basis: list[int], n: int) -> None:
    """Pivot any artificial variable still basic (at value 0) onto a real
    column; degenerate rows with no usable column are dropped from play by
    leaving them in place (their row is all-zero on real columns)."""
    for row, var in enumerate(basis):
        if var < n:
            continue
        for j in range(n):
            if abs(tableau[row, j]) > TOL:
                _pivot(tableau, basis, row, j)
                break
