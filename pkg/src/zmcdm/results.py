"""Result containers shared by the ranking methods."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from .trapezoid import EPS, FuzzyTrapezoid


def compute_ranks(scores: list[float] | tuple[float, ...], eps: float = EPS) -> tuple[tuple[int, ...], bool]:
    """Ranks (1 = best) for a score vector, higher scores first.

    Scores closer than eps tie and share the better rank; the flag reports
    whether any tie occurred, so callers never fabricate an order.
    """
    order = sorted(range(len(scores)), key=lambda i: -scores[i])
    ranks = [0] * len(scores)
    tied = False
    rank = 0
    prev: float | None = None
    for pos, idx in enumerate(order):
        if prev is None or prev - scores[idx] > eps:
            rank = pos + 1
        else:
            tied = True
        ranks[idx] = rank
        prev = scores[idx]
    return tuple(ranks), tied


@dataclass(frozen=True)
class RankingAudit:
    """Intermediate matrices kept with a result so it can be inspected.

    `converted` is the matrix after Z reduction, `normalized` after the
    min-max mapping.  Method-specific intermediates (dominance matrices or
    ideal profiles and separations) appear under `extra`.
    """

    converted: tuple[tuple[FuzzyTrapezoid, ...], ...]
    normalized: tuple[tuple[FuzzyTrapezoid, ...], ...]
    weights: tuple[float, ...]
    criterion_ids: tuple[str, ...]
    dropped: tuple[str, ...] = ()
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class RankingResult:
    """Scores, ranks and audit trail for one ranking run."""

    method: str
    alternatives: tuple[str, ...]
    scores: tuple[float, ...]
    ranks: tuple[int, ...]
    tied: bool
    degenerate: bool
    conventions: Mapping[str, Any]
    audit: RankingAudit
    theta: float | None = None

    def ordering(self) -> tuple[str, ...]:
        """Alternative labels from best to worst (ties in input order)."""
        order = sorted(range(len(self.scores)), key=lambda i: (self.ranks[i], i))
        return tuple(self.alternatives[i] for i in order)


@dataclass(frozen=True)
class SensitivityReport:
    """Score grid over a list of loss-attenuation values.

    `scores[i][k]` is the score of alternative i at thetas[k]; the report
    is rank-stable when every theta produces the same rank vector.
    """

    alternatives: tuple[str, ...]
    thetas: tuple[float, ...]
    scores: tuple[tuple[float, ...], ...]
    ranks: tuple[tuple[int, ...], ...]
    rank_stable: bool
    conventions: Mapping[str, Any]
