import random

import pytest

from helpers import load_example


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def ex1():
    return load_example("ex1.json")


@pytest.fixture(scope="session")
def ex2():
    return load_example("ex2.json")


@pytest.fixture(scope="session")
def flat():
    return load_example("flat.json")


# -- acceptance summary ----------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = "test_acceptance.py::test_criterion_"
    if marker in report.nodeid:
        name = report.nodeid.split(marker, 1)[1]
        ACCEPTANCE_RESULTS[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda n: int(n.split("_", 1)[0])):
        outcome = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {name}")
