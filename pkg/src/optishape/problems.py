"""The problem catalog: partitioned fence, box, prism/can with a regular-
polygon or circular base, and the rectangle and ellipse inscribed in a
semicircle.

Each problem has a closed-form solver (the default entry point) and an
independent numeric path built on golden-section search (the ``*_numeric``
variants), so every answer can be cross-checked at runtime.  The ellipse
problem has no closed form here and is solved numerically end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .geometry import Point2, Shape, area_coefficient
from .optimize import (
    BracketError,
    bisect_boundary,
    golden_section_min,
    grid_refine_max,
    quadratic_vertex,
)


class InfeasibleError(ValueError):
    """No candidate in the search domain satisfies the constraints."""


# Default tolerances.  Outer numeric searches resolve arguments to ~1e-8
# relative, an order tighter than the 1e-6 the cross-checks claim.  The
# inner loops (containment maximum, frontier bisection) run much tighter
# still: frontier errors of size e perturb the outer objective like noise
# and drag its argmin by ~sqrt(e/curvature), so e must stay below ~1e-13
# for the b search to stay inside 1e-7.
INNER_TOL = 5e-14
OUTER_REL_TOL = 1e-10
ELLIPSE_B_TOL = 1e-8


# --------------------------------------------------------------------------
# fence with partitions


@dataclass(frozen=True)
class FenceLayout:
    """Counts of parallel fence runs in each direction, boundary included.

    The classic one-field/three-pens problem is v_segments=4, h_segments=2.
    """

    v_segments: int
    h_segments: int

    def __post_init__(self) -> None:
        if self.v_segments < 2 or self.h_segments < 2:
            raise ValueError(
                "a closed rectangle needs at least 2 runs in each direction, "
                f"got v={self.v_segments}, h={self.h_segments}"
            )


@dataclass(frozen=True)
class FenceSolution:
    """Optimal field: each vertical run has length x, each horizontal run y."""

    x: float
    y: float
    vertical_total: float
    horizontal_total: float
    area: float


def _fence_solution(total_fence: float, layout: FenceLayout, vertical_total: float) -> FenceSolution:
    x = vertical_total / layout.v_segments
    y = (total_fence - vertical_total) / layout.h_segments
    return FenceSolution(
        x=x,
        y=y,
        vertical_total=vertical_total,
        horizontal_total=total_fence - vertical_total,
        area=x * y,
    )


def _check_positive(value: float, what: str) -> None:
    if not value > 0:
        raise ValueError(f"{what} must be positive, got {value}")


def solve_fence(total_fence: float, layout: FenceLayout) -> FenceSolution:
    """Maximize the fenced rectangle's area for a given total fence length.

    The area is a downward parabola in the total vertical length L with
    roots at L=0 and L=total_fence, so the optimum sits at the vertex:
    exactly half the fence goes to the vertical runs, half to the horizontal.
    """
    _check_positive(total_fence, "total fence length")
    vertical_total = quadratic_vertex(0.0, total_fence)
    return _fence_solution(total_fence, layout, vertical_total)


def solve_fence_numeric(
    total_fence: float, layout: FenceLayout, tol: float | None = None
) -> FenceSolution:
    """Same problem, solved by golden-section search over the vertical total."""
    _check_positive(total_fence, "total fence length")
    if tol is None:
        tol = total_fence * OUTER_REL_TOL
    sol = golden_section_min(
        lambda L: -(L / layout.v_segments) * ((total_fence - L) / layout.h_segments),
        0.0,
        total_fence,
        tol=tol,
    )
    return _fence_solution(total_fence, layout, sol.argmin)


def fence_area_curve(
    total_fence: float, layout: FenceLayout, n_points: int
) -> list[tuple[float, float]]:
    """Sample (L, area) along the fence parabola at uniform L in [0, total]."""
    _check_positive(total_fence, "total fence length")
    if n_points < 2:
        raise ValueError(f"need at least 2 sample points, got {n_points}")
    rows = []
    for L in np.linspace(0.0, total_fence, n_points):
        L = float(L)
        area = (L / layout.v_segments) * ((total_fence - L) / layout.h_segments)
        rows.append((L, area))
    return rows


# --------------------------------------------------------------------------
# rectangle and box


class RectangleSolution(NamedTuple):
    x: float
    y: float
    area: float


def solve_rectangle(perimeter: float) -> RectangleSolution:
    """Largest-area rectangle with the given perimeter: the square."""
    _check_positive(perimeter, "perimeter")
    side = perimeter / 4.0
    return RectangleSolution(x=side, y=side, area=side * side)


def solve_rectangle_numeric(perimeter: float, tol: float | None = None) -> RectangleSolution:
    """Golden-section counterpart of solve_rectangle."""
    _check_positive(perimeter, "perimeter")
    half = perimeter / 2.0
    if tol is None:
        tol = perimeter * OUTER_REL_TOL
    sol = golden_section_min(lambda x: -x * (half - x), 0.0, half, tol=tol)
    x = sol.argmin
    return RectangleSolution(x=x, y=half - x, area=x * (half - x))


class BoxSolution(NamedTuple):
    x: float
    y: float
    z: float
    surface_area: float


def solve_box(volume: float) -> BoxSolution:
    """Smallest-surface-area rectangular box of the given volume: the cube."""
    _check_positive(volume, "volume")
    edge = volume ** (1.0 / 3.0)
    return BoxSolution(x=edge, y=edge, z=edge, surface_area=6.0 * edge * edge)


def solve_box_numeric(volume: float, tol: float = 1e-8) -> BoxSolution:
    """Nested golden-section over (x, y) with z pinned by the volume."""
    _check_positive(volume, "volume")
    scale = volume ** (1.0 / 3.0)
    lo, hi = 0.05 * scale, 20.0 * scale

    def sa_for(x: float, y: float) -> float:
        # 2*(x*y + x*z + y*z) with z = volume/(x*y)
        return 2.0 * (x * y + volume / y + volume / x)

    def best_y(x: float):
        return golden_section_min(lambda y: sa_for(x, y), lo, hi, tol=scale * tol * 1e-2)

    outer = golden_section_min(lambda x: best_y(x).value, lo, hi, tol=scale * tol)
    x = outer.argmin
    y = best_y(x).argmin
    z = volume / (x * y)
    return BoxSolution(x=x, y=y, z=z, surface_area=2.0 * (x * y + x * z + y * z))


# --------------------------------------------------------------------------
# can / prism with a regular base


@dataclass(frozen=True)
class CanSolution:
    """Optimal can or prism: base inradius r, height h."""

    r: float
    h: float
    surface_area: float
    volume: float


def _can_solution(base_coefficient: float, r: float, h: float) -> CanSolution:
    c = base_coefficient
    return CanSolution(
        r=r,
        h=h,
        surface_area=2.0 * c * r * r + 2.0 * c * r * h,
        volume=c * r * r * h,
    )


def solve_can(volume: float, base: Shape) -> CanSolution:
    """Minimize the surface area of a can/prism holding the given volume.

    With base area c*r^2 the surface area is 2*c*r^2 + 2*volume/r once the
    height is eliminated; the minimum lands at r = (volume/(2c))^(1/3),
    which forces h = 2r regardless of the base shape.
    """
    _check_positive(volume, "volume")
    c = area_coefficient(base)
    r = (volume / (2.0 * c)) ** (1.0 / 3.0)
    h = volume / (c * r * r)
    return _can_solution(c, r, h)


def solve_can_numeric(volume: float, base: Shape, tol: float | None = None) -> CanSolution:
    """Golden-section counterpart of solve_can (search over the inradius)."""
    _check_positive(volume, "volume")
    c = area_coefficient(base)
    scale = (volume / (2.0 * c)) ** (1.0 / 3.0)
    if tol is None:
        tol = scale * OUTER_REL_TOL
    sol = golden_section_min(
        lambda r: 2.0 * c * r * r + 2.0 * volume / r, 0.05 * scale, 20.0 * scale, tol=tol
    )
    r = sol.argmin
    h = volume / (c * r * r)
    return _can_solution(c, r, h)


def solve_can_dual(surface_area: float, base: Shape) -> CanSolution:
    """Maximize the volume of a can/prism built from the given surface area.

    Dual of solve_can; the optimum is again h = 2r, with r = sqrt(SA/(6c)).
    """
    _check_positive(surface_area, "surface area")
    c = area_coefficient(base)
    r = math.sqrt(surface_area / (6.0 * c))
    h = (surface_area - 2.0 * c * r * r) / (2.0 * c * r)
    return _can_solution(c, r, h)


def solve_can_dual_numeric(
    surface_area: float, base: Shape, tol: float | None = None
) -> CanSolution:
    """Golden-section counterpart of solve_can_dual."""
    _check_positive(surface_area, "surface area")
    c = area_coefficient(base)
    r_max = math.sqrt(surface_area / (2.0 * c))
    if tol is None:
        tol = r_max * OUTER_REL_TOL
    # volume as a function of r alone: V(r) = r*(SA - 2*c*r^2)/2
    sol = golden_section_min(
        lambda r: -r * (surface_area - 2.0 * c * r * r) / 2.0,
        r_max * 1e-6,
        r_max,
        tol=tol,
    )
    r = sol.argmin
    h = (surface_area - 2.0 * c * r * r) / (2.0 * c * r)
    return _can_solution(c, r, h)


def equivalence_ratio(base: Shape) -> float:
    """Factor c/pi relating this base's prism to the circular can.

    At equal r and h both the volume and the surface area of the prism are
    exactly this multiple of the can's, which is why the two optimization
    problems share the h = 2r optimum.  The square gives 4/pi.
    """
    return area_coefficient(base) / math.pi


# --------------------------------------------------------------------------
# shapes inscribed in a semicircle


class SemicircleRectSolution(NamedTuple):
    x: float  # half-width; upper corners at (+/- x, y)
    y: float
    area: float


def solve_rect_semicircle(radius: float) -> SemicircleRectSolution:
    """Largest-area rectangle inscribed in a semicircle of the given radius.

    Maximizes 2*x*y subject to x^2 + y^2 = radius^2; the optimum is the
    half-square x = y = radius/sqrt(2) with area radius^2.
    """
    _check_positive(radius, "radius")
    half = radius / math.sqrt(2.0)
    return SemicircleRectSolution(x=half, y=half, area=2.0 * half * half)


def solve_rect_semicircle_numeric(
    radius: float, tol: float | None = None
) -> SemicircleRectSolution:
    """Golden-section counterpart of solve_rect_semicircle."""
    _check_positive(radius, "radius")
    if tol is None:
        tol = radius * OUTER_REL_TOL
    sol = golden_section_min(
        lambda x: -2.0 * x * math.sqrt(radius * radius - x * x), 0.0, radius, tol=tol
    )
    x = sol.argmin
    y = math.sqrt(radius * radius - x * x)
    return SemicircleRectSolution(x=x, y=y, area=2.0 * x * y)


# Slack on the squared-radius containment test: tangent ellipses must count
# as inscribed despite rounding in the theta maximum.
CONTAINMENT_SLACK = 1e-12

# The family of candidate ellipses is x^2/a^2 + (y-b)^2/b^2 = 1: centered at
# (0, b), so already tangent to the diameter at the origin.  Only the arc
# constraint (all points inside the unit circle) has to be tested.


def _max_point_radius_sq(a: float, b: float, grid_n: int, tol: float) -> float:
    def radius_sq(theta):
        return (a * np.cos(theta)) ** 2 + (b * (1.0 + np.sin(theta))) ** 2

    sol = grid_refine_max(
        radius_sq, -math.pi / 2.0, 3.0 * math.pi / 2.0, grid_n=grid_n, tol=tol,
        vectorized=True,
    )
    return sol.value


def ellipse_fits(a: float, b: float, grid_n: int = 2048, tol: float = INNER_TOL) -> bool:
    """True if the ellipse x^2/a^2 + (y-b)^2/b^2 = 1 fits in the closed unit
    half-disk y >= 0.

    The candidate family touches the diameter at the origin by construction,
    so only containment in the unit disk is checked: the maximum over theta
    of the squared distance of (a*cos(theta), b + b*sin(theta)) from the
    center must not exceed 1.  The maximum is found with the grid-then-refine
    maximizer; the squared distance is quadratic in sin(theta), so a 2048
    grid localizes its peaks with a wide margin.
    """
    _check_positive(a, "semi-axis a")
    _check_positive(b, "semi-axis b")
    return _max_point_radius_sq(a, b, grid_n, tol) <= 1.0 + CONTAINMENT_SLACK


_MIN_SEMI_AXIS = 1e-9


def max_a_for_b(b: float, tol: float = INNER_TOL) -> float:
    """Largest horizontal semi-axis a such that ellipse_fits(a, b).

    Defined for 0 < b <= 1/2; above that even a sliver-thin ellipse pokes
    out of the disk at its top point (0, 2b) and InfeasibleError is raised.
    """
    if not 0 < b < 1:
        raise ValueError(f"semi-axis b must lie in (0, 1), got {b}")
    try:
        return bisect_boundary(
            lambda a: ellipse_fits(a, b), _MIN_SEMI_AXIS, 1.0, tol=tol
        )
    except BracketError as exc:
        raise InfeasibleError(
            f"no ellipse of height 2*b = {2 * b} fits in the unit half-disk"
        ) from exc


@dataclass(frozen=True)
class EllipseSolution:
    """Largest inscribed ellipse: semi-axes, area, and arc contact points."""

    a: float
    b: float
    area: float
    contacts: tuple[Point2, ...]


def _quadratic_roots(qa: float, qb: float, qc: float, merge_tol: float) -> list[float]:
    """Real roots of qa*y^2 + qb*y + qc = 0; roots closer than merge_tol
    collapse to the vertex (tangency) double root."""
    if qa == 0.0:
        if qb == 0.0:
            return []
        return [-qc / qb]
    disc = qb * qb - 4.0 * qa * qc
    separation = math.sqrt(abs(disc)) / abs(qa)
    if separation <= merge_tol:
        return [-qb / (2.0 * qa)]
    if disc < 0.0:
        return []
    # Citardauq pairing avoids cancellation when the roots differ in size.
    q = -0.5 * (qb + math.copysign(math.sqrt(disc), qb))
    return [q / qa, qc / q]


_TANGENT_X_EPS = 1e-6


def intersect_ellipse_circle(
    a: float, b: float, merge_tol: float = 1e-4
) -> list[Point2]:
    """Intersections of the ellipse x^2/a^2 + (y-b)^2/b^2 = 1 with the unit
    upper semicircle.

    Substituting x^2 = 1 - y^2 into the ellipse equation leaves the quadratic
    (a^2 - b^2)*y^2 - 2*a^2*b*y + b^2 = 0; real roots with 0 <= y <= 1 yield
    the intersection heights.  Roots closer than merge_tol are treated as the
    tangency double root, so near-tangent ellipses report their two mirrored
    contact points (or the single top contact at x = 0) instead of four
    crossings split by rounding noise.  Points come back sorted by x.
    """
    _check_positive(a, "semi-axis a")
    _check_positive(b, "semi-axis b")
    qa = a * a - b * b
    qb = -2.0 * a * a * b
    qc = b * b
    points: list[Point2] = []
    for y in _quadratic_roots(qa, qb, qc, merge_tol):
        if not 0.0 <= y <= 1.0 + _TANGENT_X_EPS:
            continue
        y = min(y, 1.0)
        x = math.sqrt(max(1.0 - y * y, 0.0))
        if x <= _TANGENT_X_EPS:
            points.append(Point2(0.0, y))
        else:
            points.append(Point2(-x, y))
            points.append(Point2(x, y))
    points.sort(key=lambda p: (p.x, p.y))
    return points


@lru_cache(maxsize=1)
def _solve_unit_ellipse() -> EllipseSolution:
    # The top point (0, 2b) caps the feasible b at 1/2; the degenerate flat
    # end is clamped at 1e-4 rather than rejected.
    def neg_area(b: float) -> float:
        return -math.pi * b * max_a_for_b(b)

    sol = golden_section_min(neg_area, 1e-4, 0.5, tol=ELLIPSE_B_TOL)
    b = sol.argmin
    a = max_a_for_b(b)
    contacts = tuple(intersect_ellipse_circle(a, b))
    return EllipseSolution(a=a, b=b, area=math.pi * a * b, contacts=contacts)


def solve_ellipse_semicircle(radius: float = 1.0) -> EllipseSolution:
    """Largest-area ellipse inscribed in a semicircle of the given radius.

    Maximizes pi*a*b along the feasibility frontier a = max_a_for_b(b) by
    golden-section search over b.  The solution is computed once for the
    unit semicircle and rescaled: semi-axes scale with the radius, the area
    with its square.
    """
    _check_positive(radius, "radius")
    unit = _solve_unit_ellipse()
    if radius == 1.0:
        return unit
    return EllipseSolution(
        a=unit.a * radius,
        b=unit.b * radius,
        area=unit.area * radius * radius,
        contacts=tuple(Point2(p.x * radius, p.y * radius) for p in unit.contacts),
    )
