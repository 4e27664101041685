"""Shared fixtures: deterministic PDFs built once per test session."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import fixturegen  # noqa: E402

from pdfgrid import open_document  # noqa: E402

# one "[PASS]/[FAIL] criterion-N ..." line per acceptance criterion,
# echoed after the run so fd-level capture cannot swallow them
ACCEPTANCE_SCOREBOARD: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_SCOREBOARD:
        terminalreporter.section("acceptance scorecard")
        for line in ACCEPTANCE_SCOREBOARD:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixtures(tmp_path_factory) -> dict:
    """Paths of all generated fixture PDFs plus the ground-truth manifest."""
    directory = tmp_path_factory.mktemp("fixtures")
    return fixturegen.build_all(directory)


@pytest.fixture(scope="session")
def fixture_path(fixtures) -> Path:
    return fixtures["paths"]["fixture"]


@pytest.fixture(scope="session")
def manifest(fixtures) -> dict:
    return fixtures["manifest"]


@pytest.fixture(scope="session")
def fixture_handle(fixture_path):
    return open_document(fixture_path)


@pytest.fixture(scope="session")
def letter_path(fixtures) -> Path:
    return fixtures["paths"]["letter"]


@pytest.fixture(scope="session")
def a4_path(fixtures) -> Path:
    return fixtures["paths"]["a4"]


@pytest.fixture(scope="session")
def blank_path(fixtures) -> Path:
    return fixtures["paths"]["blank"]
