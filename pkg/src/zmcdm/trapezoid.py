"""Trapezoidal fuzzy numbers and the metric operations the ranking engines use.

A trapezoidal fuzzy number is an ordered quadruplet (a1, a2, a3, a4) with
piecewise-linear membership: a ramp up on [a1, a2], a plateau on [a2, a3],
and a ramp down on [a3, a4].  Triangular values are the degenerate case
a2 == a3, and crisp values the fully collapsed case a1 == a2 == a3 == a4,
so one code path serves all three shapes.  An optional height below 1
models ratings whose membership peaks short of full confidence; it scales
membership evaluation only and cancels out of the area centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Global tolerance for invariant checks and tie detection.
EPS = 1e-9


@dataclass(frozen=True)
class FuzzyTrapezoid:
    """Immutable trapezoidal fuzzy number with optional height in (0, 1]."""

    a1: float
    a2: float
    a3: float
    a4: float
    height: float = 1.0

    def __post_init__(self) -> None:
        if not (self.a1 <= self.a2 <= self.a3 <= self.a4):
            raise ValueError(
                f"trapezoid components must be ordered, got "
                f"({self.a1}, {self.a2}, {self.a3}, {self.a4})"
            )
        if not 0.0 < self.height <= 1.0:
            raise ValueError(f"height must lie in (0, 1], got {self.height}")

    @classmethod
    def triangular(cls, a: float, b: float, c: float, height: float = 1.0) -> FuzzyTrapezoid:
        """Triangular number (a, b, c) stored with a collapsed plateau."""
        return cls(a, b, b, c, height)

    @classmethod
    def crisp(cls, x: float) -> FuzzyTrapezoid:
        """Exact value x as a fully collapsed quadruplet."""
        return cls(x, x, x, x)

    @property
    def is_crisp(self) -> bool:
        return self.a1 == self.a4

    @property
    def is_triangular(self) -> bool:
        return self.a2 == self.a3

    def components(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    def membership(self, x: float) -> float:
        """Membership grade of x, piecewise linear, scaled by height.

        Total function: returns 0 outside the support [a1, a4] and height
        on the plateau [a2, a3].
        """
        if x < self.a1 or x > self.a4:
            return 0.0
        if self.a2 <= x <= self.a3:
            return self.height
        if x < self.a2:
            return self.height * (x - self.a1) / (self.a2 - self.a1)
        return self.height * (self.a4 - x) / (self.a4 - self.a3)

    def defuzzify_mean(self) -> float:
        """Quadruplet mean (a1 + a2 + a3 + a4) / 4; height is ignored."""
        return (self.a1 + self.a2 + self.a3 + self.a4) / 4.0

    def centroid(self) -> float:
        """Exact x-coordinate of the area centroid of the membership graph.

        Closed form of the integral ratio for the piecewise-linear shape.
        Invariant under height changes (the vertical scale cancels in the
        ratio) and equal to the point value for crisp input.  For a
        triangular number this reduces to (a1 + a2 + a4) / 3.
        """
        # Shift to the origin first; large offsets would otherwise cancel
        # catastrophically in the quadratic terms.
        b2 = self.a2 - self.a1
        b3 = self.a3 - self.a1
        b4 = self.a4 - self.a1
        den = (b3 + b4) - b2
        if den == 0.0:
            # Only the crisp quadruplet collapses the denominator.
            return self.a1
        num = (b3 * b3 + b4 * b4 + b3 * b4) - b2 * b2
        return self.a1 + num / (3.0 * den)

    def scale(self, s: float) -> FuzzyTrapezoid:
        """Multiply every component by s >= 0; height is unchanged.

        Negative factors are rejected because they would invert the
        component ordering.
        """
        if s < 0:
            raise ValueError(f"scale factor must be nonnegative, got {s}")
        return FuzzyTrapezoid(s * self.a1, s * self.a2, s * self.a3, s * self.a4, self.height)


def distance(a: FuzzyTrapezoid, b: FuzzyTrapezoid) -> float:
    """Metric distance between two trapezoidal fuzzy numbers.

    sqrt((1/6) * [sum((b_i - a_i)^2) + (b1 - a1)(b2 - a2) + (b3 - a3)(b4 - a4)])

    The quadratic form is positive definite, so this is a true metric on
    quadruplets; on crisp pairs it degenerates to the absolute difference.
    Heights are ignored.
    """
    d1 = b.a1 - a.a1
    d2 = b.a2 - a.a2
    d3 = b.a3 - a.a3
    d4 = b.a4 - a.a4
    q = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4 + d1 * d2 + d3 * d4
    # Guard tiny negative round-off from the cross terms.
    return math.sqrt(q / 6.0) if q > 0.0 else 0.0
