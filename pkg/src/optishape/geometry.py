"""Shape algebra for circles and regular polygons parameterized by inradius.

Every supported shape has area ``c * r**2`` and perimeter ``2 * c * r`` for
a single shape-dependent coefficient ``c`` (``pi`` for the circle,
``n * tan(pi/n)`` for the regular n-gon), where ``r`` is the inradius, i.e.
the apothem of the polygon.  That shared structure is what makes the prism
and can problems interchangeable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence


class ShapeKind(enum.Enum):
    CIRCLE = "circle"
    REGULAR_POLYGON = "regular_polygon"


@dataclass(frozen=True)
class Shape:
    """A circle or a regular polygon; ``sides`` is set only for polygons."""

    kind: ShapeKind
    sides: int | None = None

    def __post_init__(self) -> None:
        if self.kind is ShapeKind.CIRCLE:
            if self.sides is not None:
                raise ValueError("a circle has no side count")
        elif self.kind is ShapeKind.REGULAR_POLYGON:
            if self.sides is None or self.sides < 3:
                raise ValueError(f"a regular polygon needs sides >= 3, got {self.sides}")
        else:
            raise ValueError(f"unknown shape kind: {self.kind!r}")

    @classmethod
    def circle(cls) -> "Shape":
        return cls(ShapeKind.CIRCLE)

    @classmethod
    def regular_polygon(cls, sides: int) -> "Shape":
        return cls(ShapeKind.REGULAR_POLYGON, sides)

    @property
    def label(self) -> str:
        """Short tag such as ``circle`` or ``6-gon``."""
        if self.kind is ShapeKind.CIRCLE:
            return "circle"
        return f"{self.sides}-gon"


@dataclass(frozen=True)
class Point2:
    """Planar point with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")


def _check_inradius(r: float) -> None:
    if not r > 0:
        raise ValueError(f"inradius must be positive, got {r}")


def area_coefficient(shape: Shape) -> float:
    """Coefficient ``c`` with ``area = c * r**2`` for inradius ``r``.

    ``pi`` for the circle, ``n * tan(pi/n)`` for the regular n-gon; strictly
    decreasing in ``n`` and converging to ``pi`` from above.
    """
    if shape.kind is ShapeKind.CIRCLE:
        return math.pi
    assert shape.sides is not None
    return shape.sides * math.tan(math.pi / shape.sides)


def area(shape: Shape, r: float) -> float:
    """Enclosed area of the shape with inradius ``r``."""
    _check_inradius(r)
    # (c*r)*r shares its rounded first factor with perimeter(), keeping
    # area/perimeter within a couple of ulp of r/2.
    return area_coefficient(shape) * r * r


def perimeter(shape: Shape, r: float) -> float:
    """Boundary length of the shape with inradius ``r`` (equals ``2*c*r``)."""
    _check_inradius(r)
    return 2.0 * (area_coefficient(shape) * r)


def polygon_vertices(n: int, r: float) -> list[Point2]:
    """Vertices of the regular n-gon with inradius ``r``, centered at the origin.

    Counterclockwise, oriented so the midpoint of the first edge lies on the
    positive x-axis; every vertex sits at circumradius ``r / cos(pi/n)``.
    """
    if n < 3:
        raise ValueError(f"a polygon needs at least 3 sides, got {n}")
    _check_inradius(r)
    circumradius = r / math.cos(math.pi / n)
    step = 2.0 * math.pi / n
    start = -math.pi / n
    return [
        Point2(
            circumradius * math.cos(start + k * step),
            circumradius * math.sin(start + k * step),
        )
        for k in range(n)
    ]


def shoelace_area(pts: Sequence[Point2]) -> float:
    """Area of a simple polygon from its vertices in path order.

    Absolute value of the signed shoelace sum halved; orientation does not
    matter.  Used as the independent cross-check for area_coefficient().
    """
    if len(pts) < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {len(pts)}")
    acc = 0.0
    for i, p in enumerate(pts):
        q = pts[(i + 1) % len(pts)]
        acc += p.x * q.y - q.x * p.y
    return abs(acc) / 2.0
