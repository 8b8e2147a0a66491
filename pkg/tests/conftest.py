from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from bnrank.corpus import corpus  # noqa: E402

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def graphs():
    return corpus()


@pytest.fixture(scope="session")
def triangle(graphs):
    return graphs["triangle"]


@pytest.fixture(scope="session")
def banana3(graphs):
    return graphs["banana3"]


@pytest.fixture(scope="session")
def k4(graphs):
    return graphs["k4"]


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance(capsys):
    """Record and print one line per acceptance criterion."""

    def record(number, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({detail})"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
