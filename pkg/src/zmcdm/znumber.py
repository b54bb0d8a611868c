"""Z-valued ratings: a fuzzy restriction paired with a fuzzy reliability.

A Z-number (A, B) carries the rated quantity A together with B, a fuzzy
measure on [0, 1] of how much the rating can be trusted.  Before any
ranking method runs, each Z-number is reduced to a plain fuzzy number by
collapsing B to a crisp weight alpha and shrinking A by sqrt(alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .trapezoid import EPS, FuzzyTrapezoid

#: Supported ways of collapsing a fuzzy number to a crisp value.
#: "exact" uses the true area centroid, "mean" the quadruplet mean.
CENTROID_MODES = ("exact", "mean")


class UnknownTermError(LookupError):
    """A linguistic label was not found in the scale it was resolved against."""


@dataclass(frozen=True)
class ZNumber:
    """Pair of a restriction and a reliability, both trapezoidal.

    The reliability support must lie within [0, 1] so that its crisp
    collapse is a valid weight.
    """

    restriction: FuzzyTrapezoid
    reliability: FuzzyTrapezoid

    def __post_init__(self) -> None:
        b = self.reliability
        if b.a1 < -EPS or b.a4 > 1.0 + EPS:
            raise ValueError(
                f"reliability support must lie within [0, 1], got [{b.a1}, {b.a4}]"
            )


@dataclass(frozen=True)
class LinguisticScale:
    """Named mapping from term labels to fuzzy numbers."""

    name: str
    entries: Mapping[str, FuzzyTrapezoid] = field(default_factory=dict)

    def resolve(self, label: str) -> FuzzyTrapezoid:
        try:
            return self.entries[label]
        except KeyError:
            known = ", ".join(sorted(self.entries)) or "<empty>"
            raise UnknownTermError(
                f"scale {self.name!r} has no term {label!r} (known: {known})"
            ) from None


def resolve_term(scale: LinguisticScale, label: str) -> FuzzyTrapezoid:
    return scale.resolve(label)


def default_reliability_scale() -> LinguisticScale:
    """Built-in dimensionless reliability scale on [0, 1].

    Two synonym families share the same triangular numbers: VH/VS (very
    high / very sure), H/S, and M/NVS.  Their exact centroids are 11/12,
    3/4 and 1/2.
    """
    vh = FuzzyTrapezoid.triangular(0.75, 1.0, 1.0)
    h = FuzzyTrapezoid.triangular(0.5, 0.75, 1.0)
    m = FuzzyTrapezoid.triangular(0.25, 0.5, 0.75)
    return LinguisticScale(
        name="reliability",
        entries={"VH": vh, "VS": vh, "H": h, "S": h, "M": m, "NVS": m},
    )


def _check_mode(mode: str) -> None:
    if mode not in CENTROID_MODES:
        raise ValueError(f"centroid mode must be one of {CENTROID_MODES}, got {mode!r}")


def reliability_weight(reliability: FuzzyTrapezoid, mode: str = "exact") -> float:
    """Collapse a reliability number to a crisp weight alpha in [0, 1].

    Heights on the reliability do not affect the result: the centroid is
    height-invariant and the quadruplet mean never sees the height.
    """
    _check_mode(mode)
    if reliability.a1 < -EPS or reliability.a4 > 1.0 + EPS:
        raise ValueError(
            f"reliability support must lie within [0, 1], "
            f"got [{reliability.a1}, {reliability.a4}]"
        )
    alpha = reliability.centroid() if mode == "exact" else reliability.defuzzify_mean()
    # Clamp round-off at the ends of the admissible band.
    return min(1.0, max(0.0, alpha))


def convert_to_fuzzy(z: ZNumber, mode: str = "exact") -> FuzzyTrapezoid:
    """Reduce a Z-number to a plain fuzzy number.

    The reliability collapses to alpha and the restriction shrinks by
    sqrt(alpha), preserving shape class and height.  A fully sure
    reliability (alpha == 1) leaves the restriction untouched.
    """
    alpha = reliability_weight(z.reliability, mode)
    return z.restriction.scale(math.sqrt(alpha))
