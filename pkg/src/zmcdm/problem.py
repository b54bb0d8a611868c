"""Decision problems: alternatives, criteria, ratings, weights, normalization.

A problem is an m x n matrix of rating cells over m alternatives and n
criteria.  Cells may be crisp numbers, fuzzy numbers, linguistic terms, or
Z-valued pairs; everything is reduced to trapezoidal fuzzy numbers before
a ranking method runs.  Normalization maps every criterion column onto
[0, 1] and flips cost criteria so that afterwards larger is always better.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence, Union

from .trapezoid import EPS, FuzzyTrapezoid
from .znumber import (
    LinguisticScale,
    UnknownTermError,
    ZNumber,
    convert_to_fuzzy,
    default_reliability_scale,
)


class CriterionKind(str, Enum):
    BENEFIT = "benefit"
    COST = "cost"


@dataclass(frozen=True)
class TermRef:
    """Reference to a linguistic term, optionally naming the scale.

    A reference without a scale resolves against the problem's scale named
    "reliability" when one is declared, and against the built-in
    reliability scale otherwise.
    """

    term: str
    scale: str | None = None


@dataclass(frozen=True)
class ZRating:
    """Z-valued cell whose parts may still be unresolved term references."""

    restriction: Union[FuzzyTrapezoid, TermRef]
    reliability: Union[FuzzyTrapezoid, TermRef]


#: A rating cell as stored on a problem. None marks a missing cell, which
#: validation reports rather than the constructor rejecting it.
Rating = Union[float, int, FuzzyTrapezoid, TermRef, ZRating, None]

#: A criterion weight before resolution to a crisp value.
Weight = Union[float, int, FuzzyTrapezoid, TermRef, ZRating]


@dataclass(frozen=True)
class Criterion:
    id: str
    kind: CriterionKind
    weight: Weight


@dataclass(frozen=True)
class SolveDefaults:
    """Method defaults a problem document may carry."""

    theta: float | None = None
    ideal: str | None = None
    centroid: str | None = None


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding, anchored to a document path."""

    path: str
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.severity}: {self.path}: {self.message}"


class ProblemValidationError(ValueError):
    """Raised when a problem cannot be solved; carries the diagnostics."""

    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        lines = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"problem failed validation: {lines}")


class DegenerateCriterionError(ValueError):
    """A criterion whose converted ratings all coincide cannot be normalized."""

    def __init__(self, criterion_ids: Sequence[str]):
        self.criterion_ids = list(criterion_ids)
        ids = ", ".join(self.criterion_ids)
        super().__init__(
            f"degenerate criterion (zero rating range): {ids}; "
            f"drop it or pass drop_degenerate=True"
        )


@dataclass(frozen=True)
class DecisionProblem:
    """Immutable container for one decision problem.

    The constructor keeps whatever it is given; `validate` reports missing
    cells, dimension mismatches, unresolvable terms and weight problems as
    diagnostics instead of raising, so that tooling can display them all.
    """

    name: str
    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    ratings: tuple[tuple[Rating, ...], ...]
    scales: Mapping[str, LinguisticScale] = field(default_factory=dict)
    defaults: SolveDefaults | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "ratings", tuple(tuple(row) for row in self.ratings))
        object.__setattr__(self, "scales", dict(self.scales))

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    def scale_for(self, ref: TermRef) -> LinguisticScale:
        if ref.scale is not None:
            try:
                return self.scales[ref.scale]
            except KeyError:
                raise UnknownTermError(
                    f"problem declares no scale named {ref.scale!r}"
                ) from None
        if "reliability" in self.scales:
            return self.scales["reliability"]
        return default_reliability_scale()


@dataclass(frozen=True)
class NormalizedMatrix:
    """Normalized ratings plus the resolved crisp weights that go with them.

    Every component lies in [0, 1] and the weights sum to 1.  Criteria
    dropped for degeneracy are recorded so results can disclose them.
    """

    matrix: tuple[tuple[FuzzyTrapezoid, ...], ...]
    weights: tuple[float, ...]
    criterion_ids: tuple[str, ...]
    dropped: tuple[str, ...] = ()

    @property
    def n_alternatives(self) -> int:
        return len(self.matrix)

    @property
    def n_criteria(self) -> int:
        return len(self.criterion_ids)


def _resolve_part(problem: DecisionProblem, value: Union[FuzzyTrapezoid, TermRef]) -> FuzzyTrapezoid:
    if isinstance(value, TermRef):
        return problem.scale_for(value).resolve(value.term)
    return value


def resolve_rating(problem: DecisionProblem, cell: Rating, mode: str = "exact") -> FuzzyTrapezoid:
    """Reduce one rating cell to a trapezoidal fuzzy number."""
    if cell is None:
        raise ValueError("missing rating cell")
    if isinstance(cell, (int, float)):
        return FuzzyTrapezoid.crisp(float(cell))
    if isinstance(cell, FuzzyTrapezoid):
        return cell
    if isinstance(cell, TermRef):
        return _resolve_part(problem, cell)
    if isinstance(cell, ZRating):
        z = ZNumber(
            restriction=_resolve_part(problem, cell.restriction),
            reliability=_resolve_part(problem, cell.reliability),
        )
        return convert_to_fuzzy(z, mode)
    raise TypeError(f"unsupported rating cell type: {type(cell).__name__}")


def resolve_weight_fuzzy(
    problem: DecisionProblem, weight: Weight, mode: str = "exact"
) -> Union[float, FuzzyTrapezoid]:
    """Resolve a weight to either a crisp float or its converted fuzzy form."""
    if isinstance(weight, (int, float)):
        return float(weight)
    return resolve_rating(problem, weight, mode)


def validate(problem: DecisionProblem) -> list[Diagnostic]:
    """Check a problem end to end and return diagnostics, empty when clean.

    Errors make the problem unsolvable.  A "degenerate criterion" finding
    is reported as a warning because solving can proceed when the caller
    opts to drop the criterion.
    """
    diags: list[Diagnostic] = []
    m, n = problem.n_alternatives, problem.n_criteria

    if m < 2:
        diags.append(Diagnostic("alternatives", f"need at least 2 alternatives, got {m}"))
    if n < 1:
        diags.append(Diagnostic("criteria", f"need at least 1 criterion, got {n}"))
    if len(set(problem.alternatives)) != m:
        diags.append(Diagnostic("alternatives", "alternative labels must be unique"))
    ids = [c.id for c in problem.criteria]
    if len(set(ids)) != n:
        diags.append(Diagnostic("criteria", "criterion ids must be unique"))

    if len(problem.ratings) != m:
        diags.append(
            Diagnostic(
                "ratings",
                f"expected {m} rating rows (one per alternative), got {len(problem.ratings)}",
            )
        )
    cell_ok = [[False] * n for _ in range(m)]
    for i, row in enumerate(problem.ratings[:m]):
        if len(row) != n:
            diags.append(
                Diagnostic(f"ratings[{i}]", f"expected {n} cells, got {len(row)}")
            )
        for j, cell in enumerate(row[:n]):
            path = f"ratings[{i}][{j}]"
            where = ""
            if i < m and j < n:
                where = f" (alternative {problem.alternatives[i]!r}, criterion {ids[j]!r})"
            if cell is None:
                diags.append(Diagnostic(path, f"missing rating cell{where}"))
                continue
            try:
                resolve_rating(problem, cell)
            except (UnknownTermError, ValueError, TypeError) as exc:
                diags.append(Diagnostic(path, f"{exc}{where}"))
                continue
            if i < m and j < n:
                cell_ok[i][j] = True

    any_weight = False
    for j, criterion in enumerate(problem.criteria):
        path = f"criteria[{j}].weight"
        w = criterion.weight
        if isinstance(w, (int, float)):
            if w < 0:
                diags.append(Diagnostic(path, f"crisp weight must be nonnegative, got {w}"))
            elif w > 0:
                any_weight = True
            continue
        try:
            resolved = resolve_weight_fuzzy(problem, w)
        except (UnknownTermError, ValueError, TypeError) as exc:
            diags.append(Diagnostic(path, str(exc)))
            continue
        if isinstance(resolved, FuzzyTrapezoid) and resolved.centroid() > 0:
            any_weight = True
    if problem.criteria and not any_weight:
        diags.append(Diagnostic("criteria", "weight vector is all zero"))

    # Degenerate criteria: all converted ratings in a column coincide, so
    # min-max normalization has a zero denominator.
    for j in range(n):
        if not all(cell_ok[i][j] for i in range(min(m, len(problem.ratings)))):
            continue
        if len(problem.ratings) < m:
            continue
        cells = [resolve_rating(problem, problem.ratings[i][j]) for i in range(m)]
        hi = max(c.a4 for c in cells)
        lo = min(c.a1 for c in cells)
        if hi - lo <= EPS:
            diags.append(
                Diagnostic(
                    f"criteria[{j}]",
                    f"degenerate criterion {ids[j]!r}: all ratings are identical",
                    severity="warning",
                )
            )

    return diags


def require_valid(problem: DecisionProblem) -> None:
    """Raise ProblemValidationError when validation finds any error."""
    errors = [d for d in validate(problem) if d.severity == "error"]
    if errors:
        raise ProblemValidationError(errors)


def convert_matrix(problem: DecisionProblem, mode: str = "exact") -> list[list[FuzzyTrapezoid]]:
    """Cell-wise reduction of the whole rating matrix to fuzzy numbers."""
    return [
        [resolve_rating(problem, cell, mode) for cell in row]
        for row in problem.ratings
    ]


def converted_weights(
    problem: DecisionProblem, mode: str = "exact"
) -> list[Union[float, FuzzyTrapezoid]]:
    """Per-criterion weights after Z conversion, before crisp collapse."""
    return [resolve_weight_fuzzy(problem, c.weight, mode) for c in problem.criteria]


def resolve_weights(problem: DecisionProblem, mode: str = "exact") -> list[float]:
    """Collapse all weights to crisp values and normalize them to sum 1.

    Fuzzy and Z-valued weights collapse through the same centroid (or
    quadruplet-mean) convention as reliability handling; crisp weights are
    kept as given.
    """
    crisp: list[float] = []
    for value in converted_weights(problem, mode):
        if isinstance(value, FuzzyTrapezoid):
            crisp.append(value.centroid() if mode == "exact" else value.defuzzify_mean())
        else:
            if value < 0:
                raise ValueError(f"crisp weight must be nonnegative, got {value}")
            crisp.append(value)
    total = sum(crisp)
    if total <= 0:
        raise ValueError("weight vector is all zero")
    return [w / total for w in crisp]


def normalize(
    problem: DecisionProblem,
    mode: str = "exact",
    drop_degenerate: bool = False,
) -> NormalizedMatrix:
    """Map every criterion column onto [0, 1], cost criteria flipped.

    Benefit columns map components via (a - lo) / (hi - lo) with lo the
    column-wide minimum of a1 and hi the maximum of a4.  Cost columns map
    via (hi - a) / (hi - lo), which reverses component order, so the
    quadruplet is re-reversed to keep it a valid trapezoid.  Afterwards
    every criterion is benefit-oriented.

    Criteria with zero rating range raise DegenerateCriterionError unless
    `drop_degenerate` removes them (with their weights) instead.
    """
    require_valid(problem)
    converted = convert_matrix(problem, mode)
    weights = resolve_weights(problem, mode)
    m, n = problem.n_alternatives, problem.n_criteria

    degenerate: list[int] = []
    spans: list[tuple[float, float]] = []
    for j in range(n):
        hi = max(converted[i][j].a4 for i in range(m))
        lo = min(converted[i][j].a1 for i in range(m))
        spans.append((lo, hi))
        if hi - lo <= EPS:
            degenerate.append(j)

    dropped_ids: tuple[str, ...] = ()
    if degenerate:
        ids = [problem.criteria[j].id for j in degenerate]
        if not drop_degenerate:
            raise DegenerateCriterionError(ids)
        keep = [j for j in range(n) if j not in degenerate]
        if not keep:
            raise DegenerateCriterionError(ids)
        dropped_ids = tuple(ids)
        kept_weight = sum(weights[j] for j in keep)
        weights = [weights[j] / kept_weight for j in keep]
        spans = [spans[j] for j in keep]
        converted = [[converted[i][j] for j in keep] for i in range(m)]
        criteria = [problem.criteria[j] for j in keep]
    else:
        criteria = list(problem.criteria)

    rows: list[tuple[FuzzyTrapezoid, ...]] = []
    for i in range(m):
        row: list[FuzzyTrapezoid] = []
        for j, criterion in enumerate(criteria):
            lo, hi = spans[j]
            rng = hi - lo
            cell = converted[i][j]
            if criterion.kind is CriterionKind.BENEFIT:
                comps = tuple((c - lo) / rng for c in cell.components())
            else:
                comps = tuple((hi - c) / rng for c in reversed(cell.components()))
            # Clamp float dust so downstream code can rely on [0, 1].
            comps = tuple(min(1.0, max(0.0, c)) for c in comps)
            row.append(FuzzyTrapezoid(*comps, height=cell.height))
        rows.append(tuple(row))

    return NormalizedMatrix(
        matrix=tuple(rows),
        weights=tuple(weights),
        criterion_ids=tuple(c.id for c in criteria),
        dropped=dropped_ids,
    )
