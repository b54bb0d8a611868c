"""Acceptance suite: one test per criterion, goldens at fixed tolerance.

The terminal summary prints one line per criterion (see conftest).
Property criteria run on at least 1000 seeded random instances each.
"""

from __future__ import annotations

import json
import math
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from zmcdm import (
    Criterion,
    CriterionKind,
    DecisionProblem,
    FuzzyTrapezoid,
    TermRef,
    ZRating,
    distance,
    dominance_matrix,
    global_values,
    normalize,
    parse_problem,
    rank_todim,
    rank_topsis,
    sensitivity,
    serialize_problem,
)
from zmcdm.cli import main as cli_main
from zmcdm.conformance import build_report

import golden_values as golden
from oracles import (
    centroid_by_quadrature,
    classical_topsis_crisp,
    naive_dominance,
    quad_mean,
)

CONVERSION_TOL = 0.01
SCORE_TOL = 0.01
N_INSTANCES = 1000


def run_cli_json(capsys, *argv) -> dict:
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


def quadruplet(payload_cell) -> tuple[float, ...]:
    return tuple(payload_cell["trap"])


@pytest.mark.criterion("conversion-case1")
def test_conversion_case1(capsys):
    started = time.perf_counter()
    payload = run_cli_json(capsys, "convert", "case1.json", "--format", "json")
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"conversion took {elapsed:.3f}s, budget is 1s"

    for i, row in enumerate(golden.CASE1_CONVERTED):
        for j, want in enumerate(row):
            got = quadruplet(payload["matrix"][i][j])
            for k in range(4):
                assert got[k] == pytest.approx(want[k], abs=CONVERSION_TOL), (
                    f"cell [{i}][{j}] component {k}: {got[k]:.4f} vs golden {want[k]}"
                )
    for j, want in enumerate(golden.CASE1_CONVERTED_WEIGHTS):
        got = quadruplet(payload["weights_fuzzy"][j])
        for k in range(4):
            assert got[k] == pytest.approx(want[k], abs=CONVERSION_TOL), (
                f"weight [{j}] component {k}: {got[k]:.4f} vs golden {want[k]}"
            )


@pytest.mark.criterion("conversion-case2")
def test_conversion_case2(capsys):
    payload = run_cli_json(capsys, "convert", "case2.json", "--format", "json")
    for i, row in enumerate(golden.CASE2_CONVERTED):
        for j, want in enumerate(row):
            got = quadruplet(payload["matrix"][i][j])
            for k in range(4):
                assert got[k] == pytest.approx(want[k], abs=CONVERSION_TOL), (
                    f"cell [{i}][{j}] component {k}: {got[k]:.4f} vs golden {want[k]}"
                )
    # The known borderline cell: second component computes to 0.1436
    # against a printed 0.15, still inside the band.
    a1c1 = quadruplet(payload["matrix"][0][0])
    assert a1c1[1] == pytest.approx(0.1436, abs=0.0005)
    assert abs(a1c1[1] - 0.15) <= CONVERSION_TOL


@pytest.mark.criterion("sensitivity-case1")
def test_sensitivity_case1(case1):
    report = sensitivity(case1, golden.THETA_GRID)
    violations: list[str] = []
    for k, theta in enumerate(golden.THETA_GRID):
        if abs(report.scores[0][k] - 1.0) > 1e-9:
            violations.append(f"theta={theta}: Car score {report.scores[0][k]} != 1.0")
        if abs(report.scores[1][k]) > 1e-9:
            violations.append(f"theta={theta}: Taxi score {report.scores[1][k]} != 0.0")
        gap = abs(report.scores[2][k] - golden.CASE1_TRAIN_ROW[k])
        if gap > SCORE_TOL:
            violations.append(
                f"theta={theta}: Train score {report.scores[2][k]:.4f} vs golden "
                f"{golden.CASE1_TRAIN_ROW[k]:.4f} (|diff|={gap:.4f} > {SCORE_TOL})"
            )
        ordering = rank_todim(case1, theta=theta).ordering()
        if ordering != golden.CASE1_RANK_ORDER:
            violations.append(f"theta={theta}: order {ordering}")
    assert report.rank_stable
    assert not violations, "\n".join(violations)


@pytest.mark.criterion("sensitivity-case2")
def test_sensitivity_case2(case2):
    report = sensitivity(case2, golden.THETA_GRID)
    violations: list[str] = []
    for k, theta in enumerate(golden.THETA_GRID):
        if abs(report.scores[1][k] - 1.0) > 1e-9:
            violations.append(f"theta={theta}: A2 score {report.scores[1][k]} != 1.0")
        if abs(report.scores[0][k]) > 1e-9:
            violations.append(f"theta={theta}: A1 score {report.scores[0][k]} != 0.0")
        for row_idx, golden_row, label in (
            (2, golden.CASE2_A3_ROW, "A3"),
            (3, golden.CASE2_A4_ROW, "A4"),
        ):
            gap = abs(report.scores[row_idx][k] - golden_row[k])
            if gap > SCORE_TOL:
                violations.append(
                    f"theta={theta}: {label} score {report.scores[row_idx][k]:.4f} vs "
                    f"golden {golden_row[k]:.4f} (|diff|={gap:.4f})"
                )
        ordering = rank_todim(case2, theta=theta).ordering()
        if ordering != golden.CASE2_TODIM_ORDER:
            violations.append(f"theta={theta}: order {ordering}")
    assert report.rank_stable
    assert not violations, "\n".join(violations)


@pytest.mark.criterion("topsis-rank-orders")
def test_topsis_rank_orders(case1, case2):
    assert rank_topsis(case1).ordering() == golden.CASE1_TOPSIS_ORDER
    assert rank_topsis(case2).ordering() == golden.CASE2_TOPSIS_ORDER
    # Both conventions must agree on the orderings; score-level deviations
    # belong to the conformance document, which must be current.
    for strategy in ("argmax", "componentwise"):
        assert rank_topsis(case1, ideal_strategy=strategy).ordering() == golden.CASE1_TOPSIS_ORDER
        assert rank_topsis(case2, ideal_strategy=strategy).ordering() == golden.CASE2_TOPSIS_ORDER
    conformance_path = Path(__file__).resolve().parents[1] / "docs" / "conformance.md"
    assert conformance_path.is_file(), "docs/conformance.md is missing"
    assert conformance_path.read_text(encoding="utf-8") == build_report(), (
        "docs/conformance.md is stale; regenerate with python -m zmcdm.conformance"
    )


def _random_trapezoid(rng: random.Random, lo: float = -20.0, hi: float = 20.0) -> FuzzyTrapezoid:
    return FuzzyTrapezoid(*sorted(rng.uniform(lo, hi) for _ in range(4)))


def _random_spread_trapezoid(rng: random.Random) -> FuzzyTrapezoid:
    a1 = rng.uniform(-20.0, 19.0)
    width = rng.uniform(0.5, 20.0)
    m1, m2 = sorted(rng.uniform(0.0, 1.0) for _ in range(2))
    return FuzzyTrapezoid(a1, a1 + m1 * width, a1 + m2 * width, a1 + width)


def _column_problem(cells, kind=CriterionKind.BENEFIT) -> DecisionProblem:
    return DecisionProblem(
        name="col",
        alternatives=tuple(f"A{i}" for i in range(len(cells))),
        criteria=(Criterion(id="C0", kind=kind, weight=1.0),),
        ratings=tuple((c,) for c in cells),
    )


def _random_fuzzy_problem(rng: random.Random, m: int, n: int) -> DecisionProblem:
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            if i == 0:
                row.append(rng.uniform(0.0, 1.0))
            elif i == 1:
                row.append(rng.uniform(5.0, 10.0))
            else:
                pick = rng.random()
                if pick < 0.3:
                    row.append(rng.uniform(0.0, 10.0))
                elif pick < 0.7:
                    row.append(_random_trapezoid(rng, 0.0, 10.0))
                else:
                    row.append(
                        ZRating(
                            restriction=_random_trapezoid(rng, 0.0, 10.0),
                            reliability=_random_trapezoid(rng, 0.05, 1.0),
                        )
                    )
        rows.append(tuple(row))
    kinds = [rng.choice((CriterionKind.BENEFIT, CriterionKind.COST)) for _ in range(n)]
    return DecisionProblem(
        name="random",
        alternatives=tuple(f"A{i}" for i in range(m)),
        criteria=tuple(
            Criterion(id=f"C{j}", kind=kinds[j], weight=rng.uniform(0.1, 1.0))
            for j in range(n)
        ),
        ratings=tuple(rows),
    )


@pytest.mark.criterion("property-metric-axioms")
def test_property_metric_axioms():
    rng = random.Random(1001)
    for _ in range(N_INSTANCES):
        a = _random_trapezoid(rng)
        b = _random_trapezoid(rng)
        c = _random_trapezoid(rng)
        assert distance(a, b) == pytest.approx(distance(b, a), abs=1e-12)
        assert distance(a, a) == 0.0
        if a.components() != b.components():
            assert distance(a, b) > 0.0
        assert distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9
        x, y = rng.uniform(-20, 20), rng.uniform(-20, 20)
        assert distance(FuzzyTrapezoid.crisp(x), FuzzyTrapezoid.crisp(y)) == pytest.approx(
            abs(y - x), abs=1e-12
        )


@pytest.mark.criterion("property-normalization")
def test_property_normalization():
    rng = random.Random(1002)
    for _ in range(N_INSTANCES):
        size = rng.randint(2, 6)
        cells = [_random_trapezoid(rng, 0.0, 15.0) for _ in range(size)]
        if max(c.a4 for c in cells) - min(c.a1 for c in cells) < 1e-6:
            cells[0] = FuzzyTrapezoid(0, 0, 0, 1)
        benefit = normalize(_column_problem(cells))
        cost = normalize(_column_problem(cells, kind=CriterionKind.COST))
        comps = [x for row in benefit.matrix for x in row[0].components()]
        assert all(-1e-12 <= x <= 1 + 1e-12 for x in comps)
        assert min(comps) == pytest.approx(0.0, abs=1e-12)
        assert max(comps) == pytest.approx(1.0, abs=1e-12)
        for brow, crow in zip(benefit.matrix, cost.matrix):
            rev = tuple(reversed(crow[0].components()))
            for x, y in zip(brow[0].components(), rev):
                assert x + y == pytest.approx(1.0, abs=1e-9)


@pytest.mark.criterion("property-centroid-quadrature")
def test_property_centroid_matches_quadrature():
    rng = random.Random(1003)
    for _ in range(N_INSTANCES):
        f = _random_spread_trapezoid(rng)
        assert f.centroid() == pytest.approx(
            centroid_by_quadrature(*f.components()), abs=1e-9
        )


@pytest.mark.criterion("property-dominance-oracle")
def test_property_dominance_matches_bruteforce():
    rng = random.Random(1004)
    for _ in range(N_INSTANCES):
        problem = _random_fuzzy_problem(rng, m=5, n=4)
        theta = rng.uniform(0.2, 5.0)
        normalized = normalize(problem)
        dm = dominance_matrix(normalized, theta)
        cells = [[cell.components() for cell in row] for row in normalized.matrix]
        oracle = naive_dominance(cells, list(normalized.weights), theta)
        for i in range(5):
            assert dm.delta[i][i] == 0.0
            for j in range(5):
                assert dm.delta[i][j] == pytest.approx(oracle[i][j], abs=1e-12)
                for c in range(4):
                    phi = dm.partials[c][i][j]
                    gap = quad_mean(cells[i][c]) - quad_mean(cells[j][c])
                    if gap > 0:
                        assert phi >= 0
                    elif gap < 0:
                        assert phi <= 0
                    else:
                        assert phi == 0.0


@pytest.mark.criterion("property-todim-bounds")
def test_property_todim_score_bounds():
    rng = random.Random(1005)
    for _ in range(N_INSTANCES):
        problem = _random_fuzzy_problem(rng, m=rng.randint(3, 5), n=rng.randint(2, 4))
        scores, degenerate = global_values(
            dominance_matrix(normalize(problem), rng.uniform(0.2, 5.0))
        )
        assert all(0.0 <= s <= 1.0 for s in scores)
        if not degenerate:
            assert min(scores) == 0.0
            assert max(scores) == 1.0


@pytest.mark.criterion("property-topsis-bounds")
def test_property_topsis_score_bounds():
    rng = random.Random(1006)
    for _ in range(N_INSTANCES):
        problem = _random_fuzzy_problem(rng, m=rng.randint(3, 5), n=rng.randint(2, 4))
        result = rank_topsis(problem)
        d_pos = result.audit.extra["separation_positive"]
        d_neg = result.audit.extra["separation_negative"]
        for score, dp, dn in zip(result.scores, d_pos, d_neg):
            assert -1e-12 <= score <= 1.0 + 1e-12
            if result.degenerate:
                continue
            if dp == 0.0:
                assert score == 1.0
            if score == 1.0:
                assert dp <= 1e-12 * max(dn, 1e-300)


@pytest.mark.criterion("property-crisp-topsis-oracle")
def test_property_crisp_topsis_matches_classical():
    import numpy as np

    rng = random.Random(1007)
    for _ in range(N_INSTANCES):
        m, n = rng.randint(3, 6), rng.randint(2, 4)
        matrix = [[rng.uniform(0.0, 10.0) for _ in range(n)] for _ in range(m)]
        for j in range(n):
            col = [matrix[i][j] for i in range(m)]
            if max(col) - min(col) < 1e-3:
                matrix[0][j] = min(col) + 1.0
        kinds = [rng.choice((CriterionKind.BENEFIT, CriterionKind.COST)) for _ in range(n)]
        weights = [rng.uniform(0.1, 1.0) for _ in range(n)]
        problem = DecisionProblem(
            name="crisp",
            alternatives=tuple(f"A{i}" for i in range(m)),
            criteria=tuple(
                Criterion(id=f"C{j}", kind=kinds[j], weight=weights[j]) for j in range(n)
            ),
            ratings=tuple(tuple(row) for row in matrix),
        )
        got = rank_topsis(problem).scores
        want = classical_topsis_crisp(
            np.array(matrix), [k.value for k in kinds], np.array(weights)
        )
        for g, w in zip(got, want):
            assert g == pytest.approx(w, abs=1e-12)


def _random_document_problem(rng: random.Random) -> DecisionProblem:
    """Problems exercising every cell variant for the round-trip check."""
    m, n = rng.randint(2, 5), rng.randint(1, 4)
    scale_terms = {f"T{k}": _random_trapezoid(rng, 0.0, 1.0) for k in range(3)}
    scales = {"ratings": scale_terms, "reliability": {"SURE": _random_trapezoid(rng, 0.0, 1.0)}}
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            pick = rng.random()
            if pick < 0.25:
                row.append(round(rng.uniform(0.0, 10.0), 6))
            elif pick < 0.5:
                f = _random_trapezoid(rng, 0.0, 10.0)
                if rng.random() < 0.3:
                    f = FuzzyTrapezoid(*f.components(), height=round(rng.uniform(0.2, 1.0), 3))
                row.append(f)
            elif pick < 0.7:
                row.append(TermRef(rng.choice(list(scale_terms)), "ratings"))
            else:
                restriction = _random_trapezoid(rng, 0.0, 10.0)
                reliability = (
                    TermRef("SURE", None)
                    if rng.random() < 0.5
                    else _random_trapezoid(rng, 0.0, 1.0)
                )
                row.append(ZRating(restriction=restriction, reliability=reliability))
        rows.append(tuple(row))
    weights = []
    for _ in range(n):
        if rng.random() < 0.5:
            weights.append(round(rng.uniform(0.1, 1.0), 6))
        else:
            weights.append(_random_trapezoid(rng, 0.0, 1.0))
    from zmcdm import LinguisticScale

    return DecisionProblem(
        name=f"doc-{rng.randint(0, 10**6)}",
        alternatives=tuple(f"A{i}" for i in range(m)),
        criteria=tuple(
            Criterion(
                id=f"C{j}",
                kind=rng.choice((CriterionKind.BENEFIT, CriterionKind.COST)),
                weight=weights[j],
            )
            for j in range(n)
        ),
        ratings=tuple(rows),
        scales={
            name: LinguisticScale(name=name, entries=entries)
            for name, entries in scales.items()
        },
    )


@pytest.mark.criterion("round-trip")
def test_round_trip(case1, case2):
    assert parse_problem(serialize_problem(case1)) == case1
    assert parse_problem(serialize_problem(case2)) == case2

    rng = random.Random(1008)
    for _ in range(N_INSTANCES):
        problem = _random_document_problem(rng)
        assert parse_problem(serialize_problem(problem), check=False) == problem

    # Field-by-field match of the bundled documents against their source
    # tables: restrictions, sureness terms, weights and criterion kinds.
    assert case1.alternatives == ("Car", "Taxi", "Train")
    restrictions = [
        [(9, 10, 10, 12), (70, 100, 100, 120), (4, 5, 5, 6)],
        [(20, 24, 24, 25), (60, 70, 70, 100), (7, 8, 8, 10)],
        [(15, 15, 15, 15), (70, 80, 80, 90), (1, 4, 4, 7)],
    ]
    terms = [["VH", "M", "H"], ["H", "VH", "H"], ["H", "H", "H"]]
    for i in range(3):
        for j in range(3):
            cell = case1.ratings[i][j]
            assert cell.restriction.components() == pytest.approx(restrictions[i][j])
            assert cell.reliability.term == terms[i][j]
    assert [c.kind.value for c in case1.criteria] == ["cost", "cost", "benefit"]
    weight_terms = [("VH", "VH"), ("H", "VH"), ("M", "VH")]
    for criterion, (a_term, b_term) in zip(case1.criteria, weight_terms):
        assert criterion.weight.restriction.term == a_term
        assert criterion.weight.reliability.term == b_term

    assert case2.alternatives == ("A1", "A2", "A3", "A4")
    case2_restrictions = [
        [(0, 0.15, 0.25, 0.35), (0, 0.03, 0.12, 0.2), (0, 0.08, 0.16, 0.2)],
        [(0.25, 0.35, 0.42, 0.5), (0.4, 0.5, 0.65, 0.75), (0.3, 0.35, 0.45, 0.55)],
        [(0.2, 0.25, 0.35, 0.45), (0.1, 0.15, 0.25, 0.35), (0.25, 0.3, 0.38, 0.45)],
        [(0, 0.08, 0.1, 0.2), (0, 0.07, 0.16, 0.2), (0.1, 0.15, 0.25, 0.35)],
    ]
    case2_terms = [
        ["VS", "S", "VS"],
        ["S", "S", "NVS"],
        ["NVS", "S", "VS"],
        ["VS", "VS", "S"],
    ]
    for i in range(4):
        for j in range(3):
            cell = case2.ratings[i][j]
            assert cell.restriction.components() == pytest.approx(case2_restrictions[i][j])
            assert cell.reliability.term == case2_terms[i][j]
    assert [c.weight for c in case2.criteria] == [0.35, 0.5, 0.15]
    assert all(c.kind is CriterionKind.BENEFIT for c in case2.criteria)


@pytest.mark.criterion("primary-standalone")
def test_primary_suite_needs_no_secondary_component():
    # The engine must import and solve in a bare interpreter with no
    # frontend build present and no working directory assistance.
    script = (
        "from importlib import resources\n"
        "import zmcdm\n"
        "text = resources.files('zmcdm').joinpath('data', 'case1.json')"
        ".read_text(encoding='utf-8')\n"
        "problem = zmcdm.parse_problem(text)\n"
        "result = zmcdm.rank_todim(problem, theta=1.0)\n"
        "assert result.ordering() == ('Car', 'Train', 'Taxi')\n"
        "print('standalone-ok')\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", script],
        capture_output=True,
        text=True,
        cwd="/",
        timeout=60,
    )
    assert proc.returncode == 0, proc.stderr
    assert "standalone-ok" in proc.stdout
