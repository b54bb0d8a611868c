"""Ideal-solution ranking: closeness to the best and distance from the worst.

The normalized matrix is weighted per criterion, then each alternative is
scored by how near it sits to a per-criterion positive ideal profile and
how far from the negative one.  Separations are sums of per-criterion
fuzzy distances, and the final score is d- / (d+ + d-).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .problem import (
    CriterionKind,
    DecisionProblem,
    NormalizedMatrix,
    convert_matrix,
    normalize,
)
from .results import RankingAudit, RankingResult, compute_ranks
from .trapezoid import FuzzyTrapezoid, distance

#: Supported ideal-profile conventions.  "argmax" picks actual matrix
#: cells by largest or smallest defuzzified mean, so the ideals stay
#: realizable; "componentwise" builds synthetic envelopes from the
#: component-wise extremes.
IDEAL_STRATEGIES = ("argmax", "componentwise")


@dataclass(frozen=True)
class IdealPair:
    """Positive and negative ideal profiles, one fuzzy number per criterion."""

    positive: tuple[FuzzyTrapezoid, ...]
    negative: tuple[FuzzyTrapezoid, ...]
    strategy: str


def weighted_matrix(normalized: NormalizedMatrix) -> tuple[tuple[FuzzyTrapezoid, ...], ...]:
    """Scale every normalized cell by its criterion weight."""
    return tuple(
        tuple(cell.scale(normalized.weights[j]) for j, cell in enumerate(row))
        for row in normalized.matrix
    )


def _check_strategy(strategy: str) -> None:
    if strategy not in IDEAL_STRATEGIES:
        raise ValueError(
            f"ideal strategy must be one of {IDEAL_STRATEGIES}, got {strategy!r}"
        )


def ideal_solutions(
    weighted: Sequence[Sequence[FuzzyTrapezoid]],
    strategy: str = "argmax",
    kinds: Sequence[CriterionKind] | None = None,
) -> IdealPair:
    """Per-criterion best and worst profiles from the weighted matrix.

    Default normalization flips cost criteria to benefit orientation, so
    `kinds` is only needed on pipelines that skip that flip; a cost
    criterion there swaps which extreme counts as positive.

    Under "argmax" the best cell is the one with the largest defuzzified
    mean (ties broken by larger a4, then lower row index) and the worst
    the smallest mean (ties by smaller a4, then lower row index).
    """
    _check_strategy(strategy)
    m = len(weighted)
    n = len(weighted[0]) if m else 0
    positive: list[FuzzyTrapezoid] = []
    negative: list[FuzzyTrapezoid] = []
    for j in range(n):
        column = [weighted[i][j] for i in range(m)]
        if strategy == "argmax":
            hi = max(range(m), key=lambda i: (column[i].defuzzify_mean(), column[i].a4, -i))
            lo = min(range(m), key=lambda i: (column[i].defuzzify_mean(), column[i].a4, i))
            best, worst = column[hi], column[lo]
        else:
            best = FuzzyTrapezoid(*(max(c.components()[k] for c in column) for k in range(4)))
            worst = FuzzyTrapezoid(*(min(c.components()[k] for c in column) for k in range(4)))
        if kinds is not None and kinds[j] is CriterionKind.COST:
            best, worst = worst, best
        positive.append(best)
        negative.append(worst)
    return IdealPair(positive=tuple(positive), negative=tuple(negative), strategy=strategy)


def separations(
    weighted: Sequence[Sequence[FuzzyTrapezoid]], ideals: IdealPair
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Per-alternative distance sums to the positive and negative ideals.

    Each separation is the plain sum over criteria of the fuzzy distance,
    accumulated in ascending criterion order for determinism.
    """
    d_pos: list[float] = []
    d_neg: list[float] = []
    for row in weighted:
        d_pos.append(sum(distance(cell, ideals.positive[j]) for j, cell in enumerate(row)))
        d_neg.append(sum(distance(cell, ideals.negative[j]) for j, cell in enumerate(row)))
    return tuple(d_pos), tuple(d_neg)


def closeness(
    d_pos: Sequence[float], d_neg: Sequence[float]
) -> tuple[tuple[float, ...], bool]:
    """Relative closeness d- / (d+ + d-) per alternative.

    An alternative with both separations zero can only occur when a column
    has collapsed entirely; it scores 1 and flips the degeneracy flag.
    """
    if len(d_pos) != len(d_neg):
        raise ValueError("separation vectors must have the same length")
    scores: list[float] = []
    degenerate = False
    for dp, dn in zip(d_pos, d_neg):
        total = dp + dn
        if total == 0.0:
            scores.append(1.0)
            degenerate = True
        else:
            scores.append(dn / total)
    return tuple(scores), degenerate


def rank_topsis(
    problem: DecisionProblem,
    ideal_strategy: str | None = None,
    centroid_mode: str | None = None,
    drop_degenerate: bool = False,
) -> RankingResult:
    """Full pipeline: convert, normalize, weight, ideals, separations, score."""
    defaults = problem.defaults
    if ideal_strategy is None:
        ideal_strategy = defaults.ideal if defaults and defaults.ideal else "argmax"
    if centroid_mode is None:
        centroid_mode = defaults.centroid if defaults and defaults.centroid else "exact"
    _check_strategy(ideal_strategy)

    normalized = normalize(problem, mode=centroid_mode, drop_degenerate=drop_degenerate)
    converted = convert_matrix(problem, centroid_mode)
    weighted = weighted_matrix(normalized)
    ideals = ideal_solutions(weighted, strategy=ideal_strategy)
    d_pos, d_neg = separations(weighted, ideals)
    scores, degenerate = closeness(d_pos, d_neg)
    ranks, tied = compute_ranks(scores)

    audit = RankingAudit(
        converted=tuple(tuple(row) for row in converted),
        normalized=normalized.matrix,
        weights=normalized.weights,
        criterion_ids=normalized.criterion_ids,
        dropped=normalized.dropped,
        extra={
            "weighted": weighted,
            "ideal_positive": ideals.positive,
            "ideal_negative": ideals.negative,
            "separation_positive": d_pos,
            "separation_negative": d_neg,
        },
    )
    return RankingResult(
        method="topsis",
        alternatives=problem.alternatives,
        scores=scores,
        ranks=ranks,
        tied=tied,
        degenerate=degenerate,
        theta=None,
        conventions={"centroid_mode": centroid_mode, "ideal_strategy": ideal_strategy},
        audit=audit,
    )
