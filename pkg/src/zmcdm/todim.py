"""Pairwise-dominance ranking with prospect-theory loss attenuation.

Alternatives are compared pairwise on every criterion of the normalized
matrix.  Each comparison contributes a gain or a loss term whose size is
sqrt(weight * distance); losses are divided by the attenuation factor
theta, so small theta punishes losing positions harder.  Row sums of the
dominance matrix, min-max normalized, give the global scores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .problem import DecisionProblem, NormalizedMatrix, convert_matrix, normalize
from .results import RankingAudit, RankingResult, SensitivityReport, compute_ranks
from .trapezoid import distance

DEFAULT_THETA = 1.0


@dataclass(frozen=True)
class DominanceMatrix:
    """Summed dominance of each alternative over each other.

    `partials[c]` keeps the per-criterion contribution matrix so results
    can be audited; `delta` is their sum and has a zero diagonal.
    """

    delta: tuple[tuple[float, ...], ...]
    partials: tuple[tuple[tuple[float, ...], ...], ...]


def _check_theta(theta: float) -> None:
    if not (theta > 0):
        raise ValueError(f"attenuation factor theta must be positive, got {theta}")


def dominance_contribution(
    normalized: NormalizedMatrix, i: int, j: int, c: int, theta: float
) -> float:
    """Contribution of criterion c when comparing alternative i against j.

    Positive (a gain) when i's cell has the larger quadruplet mean,
    negative and attenuated by 1/theta (a loss) when smaller, zero when
    the means coincide.
    """
    _check_theta(theta)
    a = normalized.matrix[i][c]
    b = normalized.matrix[j][c]
    diff = a.defuzzify_mean() - b.defuzzify_mean()
    if diff == 0.0:
        return 0.0
    term = math.sqrt(normalized.weights[c] * distance(a, b))
    return term if diff > 0 else -term / theta


def dominance_matrix(normalized: NormalizedMatrix, theta: float) -> DominanceMatrix:
    """All pairwise dominances, summed over criteria in ascending order."""
    _check_theta(theta)
    m = normalized.n_alternatives
    n = normalized.n_criteria
    partials = [
        tuple(
            tuple(
                0.0 if i == j else dominance_contribution(normalized, i, j, c, theta)
                for j in range(m)
            )
            for i in range(m)
        )
        for c in range(n)
    ]
    delta = tuple(
        tuple(sum(partials[c][i][j] for c in range(n)) for j in range(m))
        for i in range(m)
    )
    return DominanceMatrix(delta=delta, partials=tuple(partials))


def global_values(dm: DominanceMatrix) -> tuple[tuple[float, ...], bool]:
    """Min-max normalized row sums of the dominance matrix.

    Returns the score vector and a degeneracy flag: when every row sum is
    equal there is nothing to rank and all scores are reported as 1.
    """
    sums = [sum(row) for row in dm.delta]
    lo, hi = min(sums), max(sums)
    if hi == lo:
        return tuple(1.0 for _ in sums), True
    return tuple((s - lo) / (hi - lo) for s in sums), False


def rank_todim(
    problem: DecisionProblem,
    theta: float | None = None,
    centroid_mode: str | None = None,
    drop_degenerate: bool = False,
) -> RankingResult:
    """Full pipeline: convert, normalize, dominate, score, rank.

    Explicit arguments win over the problem's stored defaults.
    """
    defaults = problem.defaults
    if theta is None:
        theta = defaults.theta if defaults and defaults.theta is not None else DEFAULT_THETA
    if centroid_mode is None:
        centroid_mode = defaults.centroid if defaults and defaults.centroid else "exact"
    _check_theta(theta)

    normalized = normalize(problem, mode=centroid_mode, drop_degenerate=drop_degenerate)
    converted = convert_matrix(problem, centroid_mode)
    dm = dominance_matrix(normalized, theta)
    scores, degenerate = global_values(dm)
    ranks, tied = compute_ranks(scores)

    audit = RankingAudit(
        converted=tuple(tuple(row) for row in converted),
        normalized=normalized.matrix,
        weights=normalized.weights,
        criterion_ids=normalized.criterion_ids,
        dropped=normalized.dropped,
        extra={"dominance": dm.delta, "dominance_partials": dm.partials},
    )
    return RankingResult(
        method="todim",
        alternatives=problem.alternatives,
        scores=scores,
        ranks=ranks,
        tied=tied,
        degenerate=degenerate,
        theta=theta,
        conventions={"centroid_mode": centroid_mode, "theta": theta},
        audit=audit,
    )


def sensitivity(
    problem: DecisionProblem,
    thetas: list[float] | tuple[float, ...],
    centroid_mode: str | None = None,
    drop_degenerate: bool = False,
) -> SensitivityReport:
    """Score grid across a list of attenuation factors.

    The rank-stability flag is true when every theta yields the identical
    rank vector.  Invalid entries are rejected up front, naming the index.
    """
    if not thetas:
        raise ValueError("theta list must not be empty")
    for k, t in enumerate(thetas):
        if not (isinstance(t, (int, float)) and t > 0):
            raise ValueError(f"theta[{k}] must be a positive number, got {t!r}")

    results = [
        rank_todim(problem, theta=float(t), centroid_mode=centroid_mode,
                   drop_degenerate=drop_degenerate)
        for t in thetas
    ]
    per_theta_ranks = tuple(r.ranks for r in results)
    stable = all(r == per_theta_ranks[0] for r in per_theta_ranks[1:])
    grid = tuple(
        tuple(results[k].scores[i] for k in range(len(results)))
        for i in range(problem.n_alternatives)
    )
    return SensitivityReport(
        alternatives=problem.alternatives,
        thetas=tuple(float(t) for t in thetas),
        scores=grid,
        ranks=per_theta_ranks,
        rank_stable=stable,
        conventions={"centroid_mode": results[0].conventions["centroid_mode"]},
    )
