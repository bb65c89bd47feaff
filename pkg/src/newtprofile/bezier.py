"""Quadratic Bezier profile arches with a single apex parameter.

The profile family used throughout the package: control points fixed to
(0, 0), (apex, 1), (1, 0), so one scalar in [0, 1] selects the shape.
Every curve starts and ends on the baseline and is concave (the region
below the arch is convex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]

# Smallest admissible x-derivative before the cartesian slope is treated
# as singular; only reachable with the apex at 0 or 1.
_SLOPE_GUARD = 1e-14


def _check_unit_param(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name}={value!r} outside [0, 1]")


@dataclass(frozen=True)
class QuadraticBezier:
    """Arch profile through (0,0) and (1,0) steered by the point (apex, 1).

    Parametric operations (`point`, `derivative`) accept the closed apex
    interval [0, 1].  Cartesian operations (`slope`, `t_from_x`,
    `second_derivative`, `curvature_sign`) require the open interior,
    where x(t) is strictly increasing and the curve is a function graph.

    Instances are immutable and safe to share across threads.
    """

    apex: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.apex <= 1.0:
            raise ValueError(f"apex={self.apex!r} outside [0, 1]")

    @property
    def control_points(self) -> tuple[Point, Point, Point]:
        return ((0.0, 0.0), (self.apex, 1.0), (1.0, 0.0))

    def point(self, t: float) -> Point:
        """Curve point (x(t), y(t)) for t in [0, 1]."""
        _check_unit_param("t", t)
        a = self.apex
        return (2.0 * a * t + (1.0 - 2.0 * a) * t * t, 2.0 * t - 2.0 * t * t)

    def derivative(self, t: float) -> Point:
        """Tangent vector (x'(t), y'(t)) for t in [0, 1]."""
        _check_unit_param("t", t)
        a = self.apex
        return (2.0 * a + 2.0 * (1.0 - 2.0 * a) * t, 2.0 - 4.0 * t)

    def slope(self, t: float) -> float:
        """Cartesian slope dy/dx at parameter t.

        Equals y'(t)/x'(t), written in the reduced form
        (1 - 2t) / (apex + (1 - 2*apex)*t).  Raises if x'(t) is too small
        to divide by, which only happens with the apex at 0 or 1.
        """
        _check_unit_param("t", t)
        a = self.apex
        denom = a + (1.0 - 2.0 * a) * t
        if 2.0 * denom <= _SLOPE_GUARD:
            raise ValueError(
                f"cartesian slope undefined: x'({t!r}) = {2.0 * denom!r} at apex {a!r}"
            )
        return (1.0 - 2.0 * t) / denom

    def second_derivative(self, t: float) -> float:
        """Cartesian second derivative d2y/dx2 at parameter t.

        Computed from the control-net derivatives as
        (y'' x' - x'' y') / x'^3; the numerator is constant along the
        curve, so the sign never changes.
        """
        _check_unit_param("t", t)
        a = self.apex
        dx = 2.0 * a + 2.0 * (1.0 - 2.0 * a) * t
        if dx <= _SLOPE_GUARD:
            raise ValueError(
                f"cartesian curvature undefined: x'({t!r}) = {dx!r} at apex {a!r}"
            )
        dy = 2.0 - 4.0 * t
        ddx = 2.0 * (1.0 - 2.0 * a)
        ddy = -4.0
        return (ddy * dx - ddx * dy) / dx**3

    def curvature_sign(self) -> int:
        """Sign of d2y/dx2, constant along the profile (-1 for every valid apex)."""
        if not 0.0 < self.apex < 1.0:
            raise ValueError(f"curvature sign needs apex in (0, 1), got {self.apex!r}")
        a = self.apex
        # numerator of d2y/dx2 at t = 0; it is independent of t
        numerator = -4.0 * (2.0 * a) - 2.0 * (1.0 - 2.0 * a) * 2.0
        if numerator < 0.0:
            return -1
        return 1 if numerator > 0.0 else 0

    def t_from_x(self, x: float) -> float:
        """Parameter t in [0, 1] with x(t) = x, for apex strictly in (0, 1).

        x(t) is strictly increasing there, so t is unique.  Solved with the
        cancellation-free quadratic formula t = x / (a + sqrt(a^2 + (1-2a)x)),
        which degenerates to t = x at a = 1/2 with no special case.  A
        bisection fallback guards the (practically unreachable) case of the
        closed form landing outside [0, 1].
        """
        _check_unit_param("x", x)
        a = self.apex
        if not 0.0 < a < 1.0:
            raise ValueError(f"x-inversion needs apex in (0, 1), got {a!r}")
        disc = a * a + (1.0 - 2.0 * a) * x
        t = x / (a + math.sqrt(disc))
        if not -1e-9 <= t <= 1.0 + 1e-9:
            t = self._bisect_x(x)
        return min(max(t, 0.0), 1.0)

    def _bisect_x(self, x: float) -> float:
        a = self.apex
        lo, hi = 0.0, 1.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if 2.0 * a * mid + (1.0 - 2.0 * a) * mid * mid < x:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
