import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent / "oracles"))

from greedysweep import Point, validate  # noqa: E402

TRIANGLE = [(0, 0), (6, 1), (2, 5)]


@pytest.fixture
def triangle():
    return validate(TRIANGLE)


@pytest.fixture
def seed():
    return Point.of(3, 2)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion.

    Call the returned function with the verdict and a short note; the line is
    printed straight away and again in the terminal summary.
    """
    name = request.node.name.removeprefix("test_")

    def record(passed: bool, note: str = "") -> bool:
        line = f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({note})" if note else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
