"""Brute-force grid search, the ground truth the clever solvers are checked
against.

Deliberately independent of the optimize module: nothing here brackets or
bisects, it just evaluates dense grids and re-grids around the incumbent.
Each refinement round re-grids the +/- one-cell neighborhood of the best
point with ``2 * points + 1`` nodes, so the cell size shrinks by a factor
``points`` per round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


class EvaluationError(ValueError):
    """The objective returned a non-finite value."""


@dataclass(frozen=True)
class GridSpec:
    """Search interval with grid density and refinement schedule."""

    lo: float
    hi: float
    points: int = 100_000
    refine_rounds: int = 2

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.points < 3:
            raise ValueError(f"need at least 3 grid points, got {self.points}")
        if self.refine_rounds < 0:
            raise ValueError(f"refine_rounds must be >= 0, got {self.refine_rounds}")

    @property
    def resolution(self) -> float:
        """Final cell size after all refinement rounds.

        Equals ``(hi - lo) / ((points - 1) * points**refine_rounds)``, which
        stays below twice ``(hi - lo) / points**(refine_rounds + 1)``.
        """
        return (self.hi - self.lo) / ((self.points - 1) * self.points**self.refine_rounds)


def _scan(f: Callable[[float], float], xs: np.ndarray) -> tuple[float, float]:
    """Best (x, f(x)) over the nodes; first minimum wins, so ties break to
    the smallest argument."""
    best_x = 0.0
    best_y = math.inf
    for x in xs:
        x = float(x)
        y = float(f(x))
        if not math.isfinite(y):
            raise EvaluationError(f"objective returned {y!r} at x={x!r}")
        if y < best_y:
            best_x, best_y = x, y
    return best_x, best_y


def brute_min(f: Callable[[float], float], grid: GridSpec) -> tuple[float, float]:
    """Exhaustive minimization of f over the grid, with refinement.

    Returns (argmin, value).  The argmin is accurate to ``grid.resolution``
    for any function whose global minimum the initial grid resolves.
    """
    xs = np.linspace(grid.lo, grid.hi, grid.points)
    best_x, best_y = _scan(f, xs)
    cell = (grid.hi - grid.lo) / (grid.points - 1)
    for _ in range(grid.refine_rounds):
        window_lo = max(grid.lo, best_x - cell)
        window_hi = min(grid.hi, best_x + cell)
        x, y = _scan(f, np.linspace(window_lo, window_hi, 2 * grid.points + 1))
        if y < best_y or (y == best_y and x < best_x):
            best_x, best_y = x, y
        cell = (window_hi - window_lo) / (2 * grid.points)
    return best_x, best_y


def brute_min_2d(
    f: Callable[[float, float], float],
    grid_x: GridSpec,
    grid_y: GridSpec,
) -> tuple[float, float, float]:
    """Exhaustive 2D minimization with refinement around the incumbent.

    Returns (x, y, value); ties break to the smallest x, then smallest y.
    """
    def scan(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float, float]:
        best = (0.0, 0.0, math.inf)
        for x in xs:
            x = float(x)
            for y in ys:
                y = float(y)
                v = float(f(x, y))
                if not math.isfinite(v):
                    raise EvaluationError(f"objective returned {v!r} at ({x!r}, {y!r})")
                if v < best[2]:
                    best = (x, y, v)
        return best

    xs = np.linspace(grid_x.lo, grid_x.hi, grid_x.points)
    ys = np.linspace(grid_y.lo, grid_y.hi, grid_y.points)
    best_x, best_y, best_v = scan(xs, ys)
    cell_x = (grid_x.hi - grid_x.lo) / (grid_x.points - 1)
    cell_y = (grid_y.hi - grid_y.lo) / (grid_y.points - 1)
    rounds = max(grid_x.refine_rounds, grid_y.refine_rounds)
    for _ in range(rounds):
        wx_lo = max(grid_x.lo, best_x - cell_x)
        wx_hi = min(grid_x.hi, best_x + cell_x)
        wy_lo = max(grid_y.lo, best_y - cell_y)
        wy_hi = min(grid_y.hi, best_y + cell_y)
        x, y, v = scan(
            np.linspace(wx_lo, wx_hi, 2 * grid_x.points + 1),
            np.linspace(wy_lo, wy_hi, 2 * grid_y.points + 1),
        )
        if v < best_v or (v == best_v and (x, y) < (best_x, best_y)):
            best_x, best_y, best_v = x, y, v
        cell_x = (wx_hi - wx_lo) / (2 * grid_x.points)
        cell_y = (wy_hi - wy_lo) / (2 * grid_y.points)
    return best_x, best_y, best_v
