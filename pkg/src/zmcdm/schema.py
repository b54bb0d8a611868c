"""On-disk problem documents: JSON parsing and lossless serialization.

A problem document is a JSON object with `name`, `alternatives`,
`criteria`, `ratings`, optional named `scales`, and optional method
`defaults`.  Rating cells and weights use tagged variants::

    {"crisp": 12.5}
    {"tri": [1, 2, 3]}                  optional "height"
    {"trap": [1, 2, 3, 4], "height": 0.8}
    {"term": "H", "scale": "ratings"}
    {"z": {"a": <fuzzy-or-term>, "b": <fuzzy-or-term-or-label>}}

Inside a Z pair, `b` may be a bare string label, resolved against the
problem's "reliability" scale or the built-in one.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .problem import (
    Criterion,
    CriterionKind,
    DecisionProblem,
    Rating,
    SolveDefaults,
    TermRef,
    Weight,
    ZRating,
    validate,
)
from .trapezoid import FuzzyTrapezoid
from .znumber import LinguisticScale


class ProblemFormatError(ValueError):
    """Malformed document; `path` points at the offending field."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _fail(message: str, path: str) -> ProblemFormatError:
    return ProblemFormatError(message, path)


def _parse_fuzzy(obj: Any, path: str) -> FuzzyTrapezoid:
    if not isinstance(obj, dict):
        raise _fail(f"expected a fuzzy value object, got {type(obj).__name__}", path)
    height = obj.get("height", 1.0)
    if not isinstance(height, (int, float)):
        raise _fail("height must be a number", path)
    try:
        if "crisp" in obj:
            x = obj["crisp"]
            if not isinstance(x, (int, float)):
                raise _fail("crisp value must be a number", path)
            x = float(x)
            return FuzzyTrapezoid(x, x, x, x, height=float(height))
        if "tri" in obj:
            parts = obj["tri"]
            if not (isinstance(parts, list) and len(parts) == 3
                    and all(isinstance(p, (int, float)) for p in parts)):
                raise _fail("tri must be a list of 3 numbers", path)
            return FuzzyTrapezoid.triangular(*map(float, parts), height=float(height))
        if "trap" in obj:
            parts = obj["trap"]
            if not (isinstance(parts, list) and len(parts) == 4
                    and all(isinstance(p, (int, float)) for p in parts)):
                raise _fail("trap must be a list of 4 numbers", path)
            return FuzzyTrapezoid(*map(float, parts), height=float(height))
    except ValueError as exc:
        if isinstance(exc, ProblemFormatError):
            raise
        raise _fail(str(exc), path) from None
    raise _fail("expected one of crisp / tri / trap", path)


def _parse_fuzzy_or_term(obj: Any, path: str, default_scale: str | None = None) -> Union[FuzzyTrapezoid, TermRef]:
    if isinstance(obj, str):
        return TermRef(term=obj, scale=default_scale)
    if isinstance(obj, dict) and "term" in obj:
        term = obj["term"]
        scale = obj.get("scale", default_scale)
        if not isinstance(term, str):
            raise _fail("term must be a string", path)
        if scale is not None and not isinstance(scale, str):
            raise _fail("scale must be a string", path)
        return TermRef(term=term, scale=scale)
    return _parse_fuzzy(obj, path)


def _parse_cell(obj: Any, path: str) -> Rating:
    if obj is None:
        return None
    if isinstance(obj, (int, float)):
        return float(obj)
    if isinstance(obj, dict) and "z" in obj:
        z = obj["z"]
        if not isinstance(z, dict) or "a" not in z or "b" not in z:
            raise _fail('z variant needs "a" and "b" parts', path)
        return ZRating(
            restriction=_parse_fuzzy_or_term(z["a"], f"{path}.z.a"),
            reliability=_parse_fuzzy_or_term(z["b"], f"{path}.z.b"),
        )
    if isinstance(obj, dict) and "crisp" in obj and "height" not in obj:
        x = obj["crisp"]
        if not isinstance(x, (int, float)):
            raise _fail("crisp value must be a number", path)
        return float(x)
    return _parse_fuzzy_or_term(obj, path)


def _parse_weight(obj: Any, path: str) -> Weight:
    cell = _parse_cell(obj, path)
    if cell is None:
        raise _fail("weight must not be null", path)
    return cell


def _parse_criterion(obj: Any, path: str) -> Criterion:
    if not isinstance(obj, dict):
        raise _fail("criterion must be an object", path)
    cid = obj.get("id")
    if not isinstance(cid, str) or not cid:
        raise _fail("criterion needs a nonempty string id", path)
    kind_raw = obj.get("kind", "benefit")
    try:
        kind = CriterionKind(kind_raw)
    except ValueError:
        raise _fail(f'kind must be "benefit" or "cost", got {kind_raw!r}', path) from None
    if "weight" not in obj:
        raise _fail("criterion needs a weight", path)
    weight = _parse_weight(obj["weight"], f"{path}.weight")
    return Criterion(id=cid, kind=kind, weight=weight)


def _parse_scales(obj: Any, path: str) -> dict[str, LinguisticScale]:
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise _fail("scales must be an object", path)
    scales: dict[str, LinguisticScale] = {}
    for name, entries in obj.items():
        if not isinstance(entries, dict):
            raise _fail("scale entries must be an object", f"{path}.{name}")
        resolved = {
            label: _parse_fuzzy(value, f"{path}.{name}.{label}")
            for label, value in entries.items()
        }
        scales[name] = LinguisticScale(name=name, entries=resolved)
    return scales


def _parse_defaults(obj: Any, path: str) -> SolveDefaults | None:
    if obj is None:
        return None
    if not isinstance(obj, dict):
        raise _fail("defaults must be an object", path)
    theta = obj.get("theta")
    if theta is not None and not (isinstance(theta, (int, float)) and theta > 0):
        raise _fail("defaults.theta must be a positive number", path)
    ideal = obj.get("ideal")
    if ideal is not None and ideal not in ("argmax", "componentwise"):
        raise _fail(f"defaults.ideal must be argmax or componentwise, got {ideal!r}", path)
    centroid = obj.get("centroid")
    if centroid is not None and centroid not in ("exact", "mean"):
        raise _fail(f"defaults.centroid must be exact or mean, got {centroid!r}", path)
    return SolveDefaults(
        theta=float(theta) if theta is not None else None,
        ideal=ideal,
        centroid=centroid,
    )


def problem_from_dict(doc: dict, check: bool = True) -> DecisionProblem:
    """Build a problem from a decoded document.

    With `check` (the default) any error-severity validation finding, such
    as an unknown term or a dimension mismatch, raises ProblemFormatError;
    pass check=False to obtain the raw problem and run `validate` later.
    """
    if not isinstance(doc, dict):
        raise _fail("document must be a JSON object", "")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise _fail("name must be a string", "name")
    alternatives = doc.get("alternatives")
    if not (isinstance(alternatives, list) and all(isinstance(a, str) for a in alternatives)):
        raise _fail("alternatives must be a list of strings", "alternatives")
    criteria_raw = doc.get("criteria")
    if not isinstance(criteria_raw, list):
        raise _fail("criteria must be a list", "criteria")
    criteria = [
        _parse_criterion(c, f"criteria[{j}]") for j, c in enumerate(criteria_raw)
    ]
    ratings_raw = doc.get("ratings")
    if not isinstance(ratings_raw, list):
        raise _fail("ratings must be a list of rows", "ratings")
    ratings: list[list[Rating]] = []
    for i, row in enumerate(ratings_raw):
        if not isinstance(row, list):
            raise _fail("rating row must be a list", f"ratings[{i}]")
        ratings.append([_parse_cell(cell, f"ratings[{i}][{j}]") for j, cell in enumerate(row)])
    scales = _parse_scales(doc.get("scales"), "scales")
    defaults = _parse_defaults(doc.get("defaults"), "defaults")

    problem = DecisionProblem(
        name=name,
        alternatives=tuple(alternatives),
        criteria=tuple(criteria),
        ratings=tuple(tuple(row) for row in ratings),
        scales=scales,
        defaults=defaults,
    )
    if check:
        errors = [d for d in validate(problem) if d.severity == "error"]
        if errors:
            first = errors[0]
            raise ProblemFormatError(
                first.message + (f" (+{len(errors) - 1} more)" if len(errors) > 1 else ""),
                first.path,
            )
    return problem


def parse_problem(text: str, check: bool = True) -> DecisionProblem:
    """Parse a JSON problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON: {exc}") from None
    return problem_from_dict(doc, check=check)


def _fuzzy_to_obj(value: FuzzyTrapezoid) -> dict:
    # The {"crisp": x} variant is reserved for plain-number cells so that
    # floats and fuzzy values round-trip to their own types.
    if value.is_triangular:
        obj: dict[str, Any] = {"tri": [value.a1, value.a2, value.a4]}
    else:
        obj = {"trap": [value.a1, value.a2, value.a3, value.a4]}
    if value.height != 1.0:
        obj["height"] = value.height
    return obj


def _fuzzyish_to_obj(value: Union[FuzzyTrapezoid, TermRef]) -> Any:
    if isinstance(value, TermRef):
        if value.scale is None:
            return {"term": value.term}
        return {"term": value.term, "scale": value.scale}
    return _fuzzy_to_obj(value)


def _cell_to_obj(cell: Rating) -> Any:
    if cell is None:
        return None
    if isinstance(cell, (int, float)):
        return {"crisp": float(cell)}
    if isinstance(cell, ZRating):
        return {
            "z": {
                "a": _fuzzyish_to_obj(cell.restriction),
                "b": _fuzzyish_to_obj(cell.reliability),
            }
        }
    return _fuzzyish_to_obj(cell)


def problem_to_dict(problem: DecisionProblem) -> dict:
    """Document form of a problem; inverse of `problem_from_dict`."""
    doc: dict[str, Any] = {
        "name": problem.name,
        "alternatives": list(problem.alternatives),
        "criteria": [
            {"id": c.id, "kind": c.kind.value, "weight": _cell_to_obj(c.weight)}
            for c in problem.criteria
        ],
        "ratings": [[_cell_to_obj(cell) for cell in row] for row in problem.ratings],
    }
    if problem.scales:
        doc["scales"] = {
            name: {label: _fuzzy_to_obj(value) for label, value in scale.entries.items()}
            for name, scale in problem.scales.items()
        }
    if problem.defaults is not None:
        defaults: dict[str, Any] = {}
        if problem.defaults.theta is not None:
            defaults["theta"] = problem.defaults.theta
        if problem.defaults.ideal is not None:
            defaults["ideal"] = problem.defaults.ideal
        if problem.defaults.centroid is not None:
            defaults["centroid"] = problem.defaults.centroid
        doc["defaults"] = defaults
    return doc


def serialize_problem(problem: DecisionProblem, indent: int | None = 2) -> str:
    return json.dumps(problem_to_dict(problem), indent=indent)
