"""Decision analysis under Z-number uncertainty.

Core pipeline: parse a problem document, reduce Z-valued ratings to
trapezoidal fuzzy numbers, normalize onto [0, 1], then rank either by
pairwise dominance with loss attenuation (todim) or by closeness to ideal
profiles (topsis).  A command-line interface, an HTTP service with
file-backed persistence, and report renderers sit on top.
"""

__version__ = "0.1.0"

from .trapezoid import EPS, FuzzyTrapezoid, distance
from .znumber import (
    CENTROID_MODES,
    LinguisticScale,
    UnknownTermError,
    ZNumber,
    convert_to_fuzzy,
    default_reliability_scale,
    reliability_weight,
    resolve_term,
)
from .problem import (
    Criterion,
    CriterionKind,
    DecisionProblem,
    DegenerateCriterionError,
    Diagnostic,
    NormalizedMatrix,
    ProblemValidationError,
    SolveDefaults,
    TermRef,
    ZRating,
    convert_matrix,
    converted_weights,
    normalize,
    resolve_rating,
    resolve_weights,
    validate,
)
from .results import RankingResult, SensitivityReport, compute_ranks
from .todim import (
    DEFAULT_THETA,
    DominanceMatrix,
    dominance_contribution,
    dominance_matrix,
    global_values,
    rank_todim,
    sensitivity,
)
from .topsis import (
    IDEAL_STRATEGIES,
    IdealPair,
    closeness,
    ideal_solutions,
    rank_topsis,
    separations,
    weighted_matrix,
)
from .schema import (
    ProblemFormatError,
    parse_problem,
    problem_from_dict,
    problem_to_dict,
    serialize_problem,
)

__all__ = [
    "EPS",
    "FuzzyTrapezoid",
    "distance",
    "CENTROID_MODES",
    "LinguisticScale",
    "UnknownTermError",
    "ZNumber",
    "convert_to_fuzzy",
    "default_reliability_scale",
    "reliability_weight",
    "resolve_term",
    "Criterion",
    "CriterionKind",
    "DecisionProblem",
    "DegenerateCriterionError",
    "Diagnostic",
    "NormalizedMatrix",
    "ProblemValidationError",
    "SolveDefaults",
    "TermRef",
    "ZRating",
    "convert_matrix",
    "converted_weights",
    "normalize",
    "resolve_rating",
    "resolve_weights",
    "validate",
    "RankingResult",
    "SensitivityReport",
    "compute_ranks",
    "DEFAULT_THETA",
    "DominanceMatrix",
    "dominance_contribution",
    "dominance_matrix",
    "global_values",
    "rank_todim",
    "sensitivity",
    "IDEAL_STRATEGIES",
    "IdealPair",
    "closeness",
    "ideal_solutions",
    "rank_topsis",
    "separations",
    "weighted_matrix",
    "ProblemFormatError",
    "parse_problem",
    "problem_from_dict",
    "problem_to_dict",
    "serialize_problem",
]
