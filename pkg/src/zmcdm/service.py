"""HTTP facade over the ranking engine with file-backed persistence.

Endpoints (all JSON, under /api):

    GET    /api/health
    GET    /api/problems
    POST   /api/problems                 body: problem document
    GET    /api/problems/{id}
    PUT    /api/problems/{id}            body: {document, expected_revision?}
    DELETE /api/problems/{id}
    POST   /api/problems/{id}/solve      body: {method, theta?, ideal?, centroid?}
    POST   /api/problems/{id}/sensitivity  body: {thetas, centroid?}

Solving is stateless: every call recomputes from the stored document, so
identical revision plus identical parameters always returns an identical
body.  Responses embed the engine version and the active conventions.
"""

from __future__ import annotations

import argparse
import json
import os
from importlib import resources
from pathlib import Path
from typing import Any

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .problem import DegenerateCriterionError, ProblemValidationError, validate
from .reports import ranking_payload, sensitivity_payload
from .schema import ProblemFormatError, problem_from_dict
from .store import ProblemStore, StaleRevisionError, UnknownProblemError
from .todim import rank_todim, sensitivity
from .topsis import rank_topsis

DATA_DIR_ENV = "ZMCDM_DATA_DIR"
UI_DIR_ENV = "ZMCDM_UI_DIR"


def _error(status: int, message: str, **extra: Any) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message, **extra})


def _diagnostics_payload(diagnostics) -> list[dict]:
    return [
        {"path": d.path, "message": d.message, "severity": d.severity}
        for d in diagnostics
    ]


def _check_document(document: Any) -> JSONResponse | None:
    """Parse and validate an incoming document; None when acceptable."""
    if not isinstance(document, dict):
        return _error(422, "document must be a JSON object")
    try:
        problem = problem_from_dict(document, check=False)
    except ProblemFormatError as exc:
        return _error(422, "malformed problem document",
                      diagnostics=[{"path": exc.path, "message": str(exc), "severity": "error"}])
    errors = [d for d in validate(problem) if d.severity == "error"]
    if errors:
        return _error(422, "problem failed validation",
                      diagnostics=_diagnostics_payload(errors))
    return None


def create_app(data_dir: str | Path | None = None, ui_dir: str | Path | None = None) -> FastAPI:
    if data_dir is None:
        data_dir = os.environ.get(DATA_DIR_ENV, "zmcdm-data")
    if ui_dir is None:
        ui_dir = os.environ.get(UI_DIR_ENV)

    store = ProblemStore(data_dir)
    app = FastAPI(title="zmcdm", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "engine_version": __version__}

    @app.get("/api/examples")
    def list_examples() -> dict:
        files = resources.files("zmcdm").joinpath("data")
        names = sorted(entry.name for entry in files.iterdir() if entry.name.endswith(".json"))
        return {"examples": names}

    @app.get("/api/examples/{name}")
    def get_example(name: str):
        if "/" in name or "\\" in name or not name.endswith(".json"):
            return _error(404, f"no bundled example named {name!r}")
        entry = resources.files("zmcdm").joinpath("data", name)
        if not entry.is_file():
            return _error(404, f"no bundled example named {name!r}")
        return json.loads(entry.read_text(encoding="utf-8"))

    @app.get("/api/problems")
    def list_problems() -> dict:
        return {"problems": [record.meta() for record in store.list()]}

    @app.post("/api/problems", status_code=201)
    def create_problem(document: dict = Body(...)):
        failure = _check_document(document)
        if failure is not None:
            return failure
        record = store.create(document)
        return JSONResponse(status_code=201, content=record.meta())

    @app.get("/api/problems/{problem_id}")
    def get_problem(problem_id: str):
        try:
            record = store.get(problem_id)
        except UnknownProblemError as exc:
            return _error(404, str(exc))
        return {**record.meta(), "document": record.document}

    @app.put("/api/problems/{problem_id}")
    def update_problem(problem_id: str, payload: dict = Body(...)):
        document = payload.get("document")
        failure = _check_document(document)
        if failure is not None:
            return failure
        expected = payload.get("expected_revision")
        if expected is not None and not isinstance(expected, int):
            return _error(400, "expected_revision must be an integer")
        try:
            record = store.update(problem_id, document, expected_revision=expected)
        except UnknownProblemError as exc:
            return _error(404, str(exc))
        except StaleRevisionError as exc:
            return _error(409, str(exc), actual_revision=exc.actual)
        return record.meta()

    @app.delete("/api/problems/{problem_id}", status_code=204)
    def delete_problem(problem_id: str):
        try:
            store.delete(problem_id)
        except UnknownProblemError as exc:
            return _error(404, str(exc))
        return JSONResponse(status_code=204, content=None)

    def _load_problem(problem_id: str):
        record = store.get(problem_id)
        return record, problem_from_dict(record.document, check=False)

    @app.post("/api/problems/{problem_id}/solve")
    def solve(problem_id: str, params: dict = Body(default={})):
        method = params.get("method", "todim")
        if method not in ("todim", "topsis"):
            return _error(400, f'method must be "todim" or "topsis", got {method!r}')
        theta = params.get("theta")
        if theta is not None and not (isinstance(theta, (int, float)) and theta > 0):
            return _error(400, f"theta must be a positive number, got {theta!r}")
        ideal = params.get("ideal")
        if ideal is not None and ideal not in ("argmax", "componentwise"):
            return _error(400, f"ideal must be argmax or componentwise, got {ideal!r}")
        centroid = params.get("centroid")
        if centroid is not None and centroid not in ("exact", "mean"):
            return _error(400, f"centroid must be exact or mean, got {centroid!r}")
        drop = bool(params.get("drop_degenerate", False))
        try:
            record, problem = _load_problem(problem_id)
        except UnknownProblemError as exc:
            return _error(404, str(exc))
        try:
            if method == "todim":
                result = rank_todim(
                    problem, theta=theta, centroid_mode=centroid, drop_degenerate=drop
                )
            else:
                result = rank_topsis(
                    problem, ideal_strategy=ideal, centroid_mode=centroid,
                    drop_degenerate=drop,
                )
        except (ProblemValidationError, DegenerateCriterionError) as exc:
            return _error(422, str(exc))
        payload = ranking_payload(result)
        payload["problem_id"] = record.id
        payload["revision"] = record.revision
        return payload

    @app.post("/api/problems/{problem_id}/sensitivity")
    def run_sensitivity(problem_id: str, params: dict = Body(default={})):
        thetas = params.get("thetas")
        if not isinstance(thetas, list) or not thetas:
            return _error(400, "thetas must be a nonempty list of positive numbers")
        for k, t in enumerate(thetas):
            if not (isinstance(t, (int, float)) and t > 0):
                return _error(400, f"thetas[{k}] must be a positive number, got {t!r}")
        centroid = params.get("centroid")
        if centroid is not None and centroid not in ("exact", "mean"):
            return _error(400, f"centroid must be exact or mean, got {centroid!r}")
        drop = bool(params.get("drop_degenerate", False))
        try:
            record, problem = _load_problem(problem_id)
        except UnknownProblemError as exc:
            return _error(404, str(exc))
        try:
            report = sensitivity(
                problem, thetas, centroid_mode=centroid, drop_degenerate=drop
            )
        except (ProblemValidationError, DegenerateCriterionError) as exc:
            return _error(422, str(exc))
        payload = sensitivity_payload(report)
        payload["problem_id"] = record.id
        payload["revision"] = record.revision
        return payload

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="zmcdm-service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8571)
    parser.add_argument("--data-dir", default=None, help=f"defaults to ${DATA_DIR_ENV} or ./zmcdm-data")
    parser.add_argument("--ui-dir", default=None, help="static directory for the web workbench")
    args = parser.parse_args(argv)

    import uvicorn

    app = create_app(data_dir=args.data_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
