"""Command-line interface.

Commands: validate, convert, solve, sensitivity, compare.  Reports go to
stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 when the
problem fails validation or solving, 2 on usage errors.

File arguments resolve in order against the literal path, the directory
named by ZMCDM_DATA_DIR, and the bundled example directory, so
`zmcdm solve case1.json --method todim` works out of the box.
"""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from .problem import (
    DecisionProblem,
    DegenerateCriterionError,
    ProblemValidationError,
    convert_matrix,
    converted_weights,
    resolve_weights,
    validate,
)
from .reports import (
    RANKING_FORMATS,
    SENSITIVITY_FORMATS,
    conversion_payload,
    format_compare,
    format_conversion,
    format_ranking,
    format_sensitivity,
)
from .schema import ProblemFormatError, parse_problem
from .todim import rank_todim, sensitivity
from .topsis import rank_topsis

DATA_DIR_ENV = "ZMCDM_DATA_DIR"


def _resolve_path(name: str) -> Path | None:
    p = Path(name)
    if p.is_file():
        return p
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        candidate = Path(env) / name
        if candidate.is_file():
            return candidate
    bundled = resources.files("zmcdm").joinpath("data", name)
    if bundled.is_file():
        return Path(str(bundled))
    return None


def _load(name: str) -> DecisionProblem:
    path = _resolve_path(name)
    if path is None:
        raise FileNotFoundError(f"problem file not found: {name}")
    return parse_problem(path.read_text(encoding="utf-8"))


def _theta_list(raw: str) -> list[float]:
    items = [part.strip() for part in raw.split(",") if part.strip()]
    if not items:
        raise argparse.ArgumentTypeError("theta list must not be empty")
    thetas: list[float] = []
    for k, item in enumerate(items):
        try:
            value = float(item)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"theta[{k}] is not a number: {item!r}"
            ) from None
        if not value > 0:
            raise argparse.ArgumentTypeError(f"theta[{k}] must be positive, got {value}")
        thetas.append(value)
    return thetas


def _positive_theta(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"theta is not a number: {raw!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"theta must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zmcdm",
        description="Rank alternatives under Z-number uncertainty.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats=RANKING_FORMATS) -> None:
        p.add_argument("file", help="problem document (JSON)")
        p.add_argument("--format", choices=formats, default="table")
        p.add_argument("--precision", type=int, default=4, help="decimal places in reports")
        p.add_argument(
            "--centroid",
            choices=("exact", "mean"),
            default=None,
            help="crisp collapse: exact area centroid or quadruplet mean",
        )

    p_validate = sub.add_parser("validate", help="check a problem document")
    p_validate.add_argument("file")

    p_convert = sub.add_parser(
        "convert", help="emit the matrix after Z-number reduction"
    )
    add_common(p_convert)

    p_solve = sub.add_parser("solve", help="rank the alternatives")
    add_common(p_solve)
    p_solve.add_argument("--method", choices=("todim", "topsis"), required=True)
    p_solve.add_argument("--theta", type=_positive_theta, default=None,
                         help="loss attenuation factor (todim)")
    p_solve.add_argument("--ideal", choices=("argmax", "componentwise"), default=None,
                         help="ideal-profile convention (topsis)")
    p_solve.add_argument("--drop-degenerate", action="store_true",
                         help="drop zero-range criteria instead of failing")

    p_sens = sub.add_parser("sensitivity", help="score grid across theta values")
    add_common(p_sens, formats=SENSITIVITY_FORMATS)
    p_sens.add_argument("--theta", type=_theta_list, required=True,
                        help="comma-separated positive values, e.g. 0.5,1,2")
    p_sens.add_argument("--drop-degenerate", action="store_true")

    p_cmp = sub.add_parser("compare", help="run both methods side by side")
    add_common(p_cmp)
    p_cmp.add_argument("--theta", type=_positive_theta, default=None)
    p_cmp.add_argument("--ideal", choices=("argmax", "componentwise"), default=None)
    p_cmp.add_argument("--drop-degenerate", action="store_true")

    return parser


def _cmd_validate(args: argparse.Namespace) -> int:
    path = _resolve_path(args.file)
    if path is None:
        print(f"error: problem file not found: {args.file}", file=sys.stderr)
        return 1
    try:
        problem = parse_problem(path.read_text(encoding="utf-8"), check=False)
    except ProblemFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    diagnostics = validate(problem)
    for diag in diagnostics:
        print(str(diag), file=sys.stderr)
    if any(d.severity == "error" for d in diagnostics):
        return 1
    print(f"ok: {problem.name or args.file} "
          f"({problem.n_alternatives} alternatives x {problem.n_criteria} criteria)")
    if diagnostics:
        print(f"{len(diagnostics)} warning(s); see stderr", file=sys.stderr)
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    problem = _load(args.file)
    mode = args.centroid or "exact"
    converted = convert_matrix(problem, mode)
    payload = conversion_payload(
        problem,
        converted,
        converted_weights(problem, mode),
        resolve_weights(problem, mode),
    )
    print(format_conversion(payload, args.format, args.precision), end="")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    problem = _load(args.file)
    if args.method == "todim":
        result = rank_todim(
            problem,
            theta=args.theta,
            centroid_mode=args.centroid,
            drop_degenerate=args.drop_degenerate,
        )
    else:
        result = rank_topsis(
            problem,
            ideal_strategy=args.ideal,
            centroid_mode=args.centroid,
            drop_degenerate=args.drop_degenerate,
        )
    print(format_ranking(result, args.format, args.precision), end="")
    return 0


def _cmd_sensitivity(args: argparse.Namespace) -> int:
    problem = _load(args.file)
    report = sensitivity(
        problem,
        args.theta,
        centroid_mode=args.centroid,
        drop_degenerate=args.drop_degenerate,
    )
    print(format_sensitivity(report, args.format, args.precision), end="")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    problem = _load(args.file)
    todim_result = rank_todim(
        problem,
        theta=args.theta,
        centroid_mode=args.centroid,
        drop_degenerate=args.drop_degenerate,
    )
    topsis_result = rank_topsis(
        problem,
        ideal_strategy=args.ideal,
        centroid_mode=args.centroid,
        drop_degenerate=args.drop_degenerate,
    )
    print(format_compare(todim_result, topsis_result, args.format, args.precision), end="")
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "convert": _cmd_convert,
    "solve": _cmd_solve,
    "sensitivity": _cmd_sensitivity,
    "compare": _cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ProblemFormatError, ProblemValidationError, DegenerateCriterionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
