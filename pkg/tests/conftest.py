"""Shared test oracles, independent of the library's solver paths.

The containment and frontier helpers below work in s = sin(theta), where the
arc-containment function is the plain quadratic
(b^2 - a^2)*s^2 + 2*b^2*s + (a^2 + b^2); its maximum over [-1, 1] and the
a(b) frontier it implies were derived by hand and are used to cross-check
the library's theta-grid route.
"""

from __future__ import annotations

import math


def containment_max(a: float, b: float) -> float:
    """Max over s in [-1, 1] of the squared distance of the ellipse from the
    disk center, written as a quadratic in s = sin(theta)."""
    qa = b * b - a * a
    qb = 2.0 * b * b
    qc = a * a + b * b
    candidates = [-1.0, 1.0]
    if qa < 0:  # concave: interior vertex is a maximum
        s = -qb / (2.0 * qa)
        if -1.0 < s < 1.0:
            candidates.append(s)
    return max(qa * s * s + qb * s + qc for s in candidates)


def ellipse_fits_analytic(a: float, b: float) -> bool:
    return containment_max(a, b) <= 1.0 + 1e-12


def frontier_a_analytic(b: float) -> float:
    """Closed-form largest feasible a for a given b <= 1/2: setting
    containment_max(a, b) = 1 gives a^2 = b^2 + ((1-2b^2) + sqrt(1-4b^2))/2."""
    u = ((1.0 - 2.0 * b * b) + math.sqrt(max(0.0, 1.0 - 4.0 * b * b))) / 2.0
    return math.sqrt(b * b + u)
