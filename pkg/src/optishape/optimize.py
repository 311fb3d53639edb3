"""Scalar minimization and bracketing utilities.

Golden-section search for unimodal objectives, boundary bisection for
monotone predicates, a grid-then-refine maximizer for possibly multi-bump
functions, central differences, and the closed-form vertex of a downward
parabola.  Everything is deterministic: identical inputs produce the same
Solution1D, bit for bit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

# 1/phi, the bracket shrink factor per golden-section iteration.
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 500


class Method(enum.Enum):
    GOLDEN_SECTION = "golden_section"
    CLOSED_FORM = "closed_form"
    GRID_REFINE = "grid_refine"
    BISECTION = "bisection"


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration cap before converging."""


class BracketError(ValueError):
    """A bracketing precondition does not hold."""


@dataclass(frozen=True)
class Solution1D:
    """Result of a 1D search; ``argmin`` holds the optimizer's argument."""

    argmin: float
    value: float
    evaluations: int
    achieved_interval: float
    method: Method


def golden_section_min(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Solution1D:
    """Minimize a unimodal function on [lo, hi] by golden-section search.

    Args:
        f: objective; unimodality on the bracket is the caller's duty.
        lo, hi: bracket endpoints, lo < hi.  Only interior points are evaluated.
        tol: absolute tolerance on the argument; the final bracket width.
        max_iter: iteration cap; exceeding it raises ConvergenceError.

    Returns:
        Solution1D with the bracket midpoint as argmin.  On exact ties the
        lower-argument side of the bracket is kept, so results are
        deterministic.
    """
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    c = hi - (hi - lo) * INV_PHI
    d = lo + (hi - lo) * INV_PHI
    fc = f(c)
    fd = f(d)
    evaluations = 2
    iterations = 0
    while hi - lo > tol:
        iterations += 1
        if iterations > max_iter:
            raise ConvergenceError(
                f"no convergence to tol={tol} within {max_iter} iterations "
                f"(bracket width {hi - lo})"
            )
        if fc <= fd:
            hi = d
            d = c
            fd = fc
            c = hi - (hi - lo) * INV_PHI
            fc = f(c)
        else:
            lo = c
            c = d
            fc = fd
            d = lo + (hi - lo) * INV_PHI
            fd = f(d)
        evaluations += 1
    x = 0.5 * (lo + hi)
    return Solution1D(
        argmin=x,
        value=f(x),
        evaluations=evaluations + 1,
        achieved_interval=hi - lo,
        method=Method.GOLDEN_SECTION,
    )


def quadratic_vertex(root1: float, root2: float) -> float:
    """Abscissa of a parabola's vertex, halfway between its two roots."""
    return 0.5 * (root1 + root2)


def bisect_boundary(
    pred: Callable[[float], bool],
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """Locate the true/false boundary of a monotone predicate.

    Requires pred(lo) true and pred(hi) false; returns x within tol of the
    crossing point.
    """
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if not pred(lo):
        raise BracketError(f"pred({lo}) must be true at the lower end")
    if pred(hi):
        raise BracketError(f"pred({hi}) must be false at the upper end")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break  # bracket already spans adjacent floats
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    """Central finite-difference estimate of f'(x) with step h > 0."""
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    return (f(x + h) - f(x - h)) / (2.0 * h)


def grid_refine_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    grid_n: int = 2048,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    vectorized: bool = False,
) -> Solution1D:
    """Maximize f on [lo, hi]: dense grid scan, then golden-section refine.

    Robust against multiple local maxima as long as the grid resolves the
    global one; the refinement runs in the one-cell bracket around the best
    grid point.  With ``vectorized=True`` the grid pass calls ``f`` once with
    a numpy array (``f`` must then accept arrays as well as scalars).

    Returns a Solution1D whose ``argmin`` field holds the maximizer and
    ``value`` the maximum (the field names come from the shared result type).
    """
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if grid_n < 3:
        raise ValueError(f"grid_n must be at least 3, got {grid_n}")
    xs = np.linspace(lo, hi, grid_n)
    if vectorized:
        ys = np.asarray(f(xs), dtype=float)
    else:
        ys = np.array([f(x) for x in xs], dtype=float)
    best = int(np.argmax(ys))
    bracket_lo = float(xs[max(best - 1, 0)])
    bracket_hi = float(xs[min(best + 1, grid_n - 1)])
    refined = golden_section_min(
        lambda x: -f(x), bracket_lo, bracket_hi, tol=tol, max_iter=max_iter
    )
    argmax, value = refined.argmin, -refined.value
    if ys[best] > value:  # refinement fell onto a lesser bump; keep the grid point
        argmax, value = float(xs[best]), float(ys[best])
    return Solution1D(
        argmin=argmax,
        value=value,
        evaluations=grid_n + refined.evaluations,
        achieved_interval=refined.achieved_interval,
        method=Method.GRID_REFINE,
    )
