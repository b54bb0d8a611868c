from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zmcdm import parse_problem


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(name): tags a test as one acceptance criterion"
    )


@pytest.fixture(scope="session")
def case1():
    text = resources.files("zmcdm").joinpath("data", "case1.json").read_text(encoding="utf-8")
    return parse_problem(text)


@pytest.fixture(scope="session")
def case2():
    text = resources.files("zmcdm").joinpath("data", "case2.json").read_text(encoding="utf-8")
    return parse_problem(text)


_criterion_outcomes: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _criterion_outcomes[marker.args[0]] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criterion_outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _criterion_outcomes.items():
        terminalreporter.write_line(f"criterion {name}: {outcome}")
