"""Rendering of rankings, sensitivity grids and converted matrices.

Three output families: aligned human tables, JSON payloads (shared with
the HTTP service so every surface reports identical numbers), and flat
CSV.  Sensitivity CSV has one row per alternative and one column per
theta; the plot variant emits (alternative, theta, score) triples.
"""

from __future__ import annotations

import io
import json
from typing import Any, Sequence, Union

from . import __version__
from .problem import DecisionProblem
from .results import RankingResult, SensitivityReport
from .trapezoid import FuzzyTrapezoid

RANKING_FORMATS = ("table", "json", "csv")
SENSITIVITY_FORMATS = ("table", "json", "csv", "plot-csv")


def render_number(x: float, precision: int = 4) -> str:
    return f"{x:.{precision}f}"


def render_theta(t: float) -> str:
    """Minimal decimal form: 1.0 renders as 1, 0.5 stays 0.5."""
    return f"{t:g}"


def render_fuzzy(value: Union[FuzzyTrapezoid, float], precision: int = 4) -> str:
    if isinstance(value, FuzzyTrapezoid):
        parts = ", ".join(render_number(c, precision) for c in value.components())
        if value.height != 1.0:
            return f"({parts}; {render_number(value.height, precision)})"
        return f"({parts})"
    return render_number(value, precision)


def _table(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    out = io.StringIO()
    out.write("  ".join(h.ljust(widths[k]) for k, h in enumerate(header)).rstrip() + "\n")
    out.write("  ".join("-" * w for w in widths) + "\n")
    for row in rows:
        out.write("  ".join(cell.ljust(widths[k]) for k, cell in enumerate(row)).rstrip() + "\n")
    return out.getvalue()


def _fuzzy_payload(value: Union[FuzzyTrapezoid, float]) -> Any:
    if isinstance(value, FuzzyTrapezoid):
        obj: dict[str, Any] = {"trap": list(value.components())}
        if value.height != 1.0:
            obj["height"] = value.height
        return obj
    return value


def ranking_payload(result: RankingResult) -> dict:
    """JSON-ready view of a ranking run, audit trail included."""
    extra = result.audit.extra
    audit: dict[str, Any] = {
        "converted": [[_fuzzy_payload(c) for c in row] for row in result.audit.converted],
        "normalized": [[_fuzzy_payload(c) for c in row] for row in result.audit.normalized],
        "weights": list(result.audit.weights),
        "criterion_ids": list(result.audit.criterion_ids),
        "dropped_criteria": list(result.audit.dropped),
    }
    if "dominance" in extra:
        audit["dominance"] = [list(row) for row in extra["dominance"]]
        audit["dominance_partials"] = [
            [list(row) for row in partial] for partial in extra["dominance_partials"]
        ]
    if "weighted" in extra:
        audit["weighted"] = [[_fuzzy_payload(c) for c in row] for row in extra["weighted"]]
        audit["ideal_positive"] = [_fuzzy_payload(c) for c in extra["ideal_positive"]]
        audit["ideal_negative"] = [_fuzzy_payload(c) for c in extra["ideal_negative"]]
        audit["separation_positive"] = list(extra["separation_positive"])
        audit["separation_negative"] = list(extra["separation_negative"])
    return {
        "method": result.method,
        "alternatives": list(result.alternatives),
        "scores": list(result.scores),
        "ranks": list(result.ranks),
        "ordering": list(result.ordering()),
        "tied": result.tied,
        "degenerate": result.degenerate,
        "theta": result.theta,
        "conventions": dict(result.conventions),
        "engine_version": __version__,
        "audit": audit,
    }


def sensitivity_payload(report: SensitivityReport) -> dict:
    return {
        "alternatives": list(report.alternatives),
        "thetas": list(report.thetas),
        "scores": [list(row) for row in report.scores],
        "ranks": [list(row) for row in report.ranks],
        "rank_stable": report.rank_stable,
        "conventions": dict(report.conventions),
        "engine_version": __version__,
    }


def format_ranking(result: RankingResult, fmt: str = "table", precision: int = 4) -> str:
    if fmt == "json":
        return json.dumps(ranking_payload(result), indent=2)
    if fmt == "csv":
        lines = ["alt,score,rank"]
        for i, alt in enumerate(result.alternatives):
            lines.append(f"{alt},{render_number(result.scores[i], precision)},{result.ranks[i]}")
        return "\n".join(lines) + "\n"
    if fmt == "table":
        order = sorted(range(len(result.alternatives)), key=lambda i: (result.ranks[i], i))
        rows = [
            [
                str(result.ranks[i]),
                result.alternatives[i],
                render_number(result.scores[i], precision),
            ]
            for i in order
        ]
        head = f"method: {result.method}"
        if result.theta is not None:
            head += f"  theta: {render_theta(result.theta)}"
        notes = []
        if result.tied:
            notes.append("ties present")
        if result.degenerate:
            notes.append("degenerate scores")
        if result.audit.dropped:
            notes.append("dropped criteria: " + ", ".join(result.audit.dropped))
        table = _table(rows, header=["rank", "alternative", "score"])
        tail = ("note: " + "; ".join(notes) + "\n") if notes else ""
        return f"{head}\n{table}{tail}"
    raise ValueError(f"unknown ranking format {fmt!r} (choose from {RANKING_FORMATS})")


def format_sensitivity(report: SensitivityReport, fmt: str = "table", precision: int = 4) -> str:
    thetas = [render_theta(t) for t in report.thetas]
    if fmt == "json":
        return json.dumps(sensitivity_payload(report), indent=2)
    if fmt == "csv":
        lines = ["alt," + ",".join(thetas)]
        for i, alt in enumerate(report.alternatives):
            cells = ",".join(render_number(s, precision) for s in report.scores[i])
            lines.append(f"{alt},{cells}")
        return "\n".join(lines) + "\n"
    if fmt == "plot-csv":
        lines = ["alt,theta,score"]
        for i, alt in enumerate(report.alternatives):
            for k, t in enumerate(thetas):
                lines.append(f"{alt},{t},{render_number(report.scores[i][k], precision)}")
        return "\n".join(lines) + "\n"
    if fmt == "table":
        rows = [
            [alt] + [render_number(s, precision) for s in report.scores[i]]
            for i, alt in enumerate(report.alternatives)
        ]
        table = _table(rows, header=["alt"] + [f"theta={t}" for t in thetas])
        stability = "stable" if report.rank_stable else "UNSTABLE"
        return f"{table}rank order across thetas: {stability}\n"
    raise ValueError(f"unknown sensitivity format {fmt!r} (choose from {SENSITIVITY_FORMATS})")


def conversion_payload(
    problem: DecisionProblem,
    converted: Sequence[Sequence[FuzzyTrapezoid]],
    weights_fuzzy: Sequence[Union[float, FuzzyTrapezoid]],
    weights: Sequence[float],
) -> dict:
    return {
        "name": problem.name,
        "alternatives": list(problem.alternatives),
        "criterion_ids": [c.id for c in problem.criteria],
        "weights_fuzzy": [_fuzzy_payload(w) for w in weights_fuzzy],
        "weights": list(weights),
        "matrix": [[_fuzzy_payload(c) for c in row] for row in converted],
        "engine_version": __version__,
    }


def format_conversion(payload: dict, fmt: str = "table", precision: int = 4) -> str:
    def as_fuzzy(obj: Any) -> str:
        if isinstance(obj, dict):
            comps = ", ".join(render_number(c, precision) for c in obj["trap"])
            if "height" in obj:
                return f"({comps}; {render_number(obj['height'], precision)})"
            return f"({comps})"
        return render_number(obj, precision)

    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        lines = ["alt," + ",".join(payload["criterion_ids"])]
        lines.append(
            "weights,"
            + ",".join(render_number(w, precision) for w in payload["weights"])
        )
        for alt, row in zip(payload["alternatives"], payload["matrix"]):
            lines.append(alt + "," + ",".join('"' + as_fuzzy(c) + '"' for c in row))
        return "\n".join(lines) + "\n"
    if fmt == "table":
        header = ["alt"] + list(payload["criterion_ids"])
        rows = [["weight (fuzzy)"] + [as_fuzzy(w) for w in payload["weights_fuzzy"]]]
        rows.append(["weight (crisp)"] + [render_number(w, precision) for w in payload["weights"]])
        for alt, row in zip(payload["alternatives"], payload["matrix"]):
            rows.append([alt] + [as_fuzzy(c) for c in row])
        return _table(rows, header)
    raise ValueError(f"unknown conversion format {fmt!r} (choose from {RANKING_FORMATS})")


def format_compare(
    todim_result: RankingResult, topsis_result: RankingResult, fmt: str = "table",
    precision: int = 4,
) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "alternatives": list(todim_result.alternatives),
                "todim": ranking_payload(todim_result),
                "topsis": ranking_payload(topsis_result),
            },
            indent=2,
        )
    if fmt == "csv":
        lines = ["alt,todim,topsis"]
        for i, alt in enumerate(todim_result.alternatives):
            lines.append(
                f"{alt},{render_number(todim_result.scores[i], precision)},"
                f"{render_number(topsis_result.scores[i], precision)}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "table":
        rows = [
            [
                alt,
                render_number(todim_result.scores[i], precision),
                str(todim_result.ranks[i]),
                render_number(topsis_result.scores[i], precision),
                str(topsis_result.ranks[i]),
            ]
            for i, alt in enumerate(todim_result.alternatives)
        ]
        return _table(
            rows,
            header=["alt", "todim score", "todim rank", "topsis score", "topsis rank"],
        )
    raise ValueError(f"unknown compare format {fmt!r} (choose from {RANKING_FORMATS})")
