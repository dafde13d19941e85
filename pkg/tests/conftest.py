import random

import pytest

from lssforest.demos import binary_figure5, figure1
from lssforest.graph import random_forest

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _ACCEPTANCE:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")


@pytest.fixture
def fig1():
    return figure1()


@pytest.fixture
def fig5():
    return binary_figure5()


def forest_family(seed, count, max_n, min_n=1):
    """Seeded list of random forests, reproducible across runs."""
    rng = random.Random(seed)
    return [random_forest(rng, rng.randint(min_n, max_n)) for _ in range(count)]
