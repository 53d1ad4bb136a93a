from __future__ import annotations

import pytest

from hallcluster.quiver import Quiver, Relation, kronecker, linear_a


@pytest.fixture
def a2() -> Quiver:
    return linear_a(2)


@pytest.fixture
def a3() -> Quiver:
    """1 -> 2 <- 3."""
    return Quiver(3, ((0, 1), (2, 1)))


@pytest.fixture
def a3_rel() -> Quiver:
    """3 -> 2 -> 1 with the composite killed."""
    return Quiver(3, ((2, 1), (1, 0)), (Relation.of((1, (1, 0))),))


@pytest.fixture
def kr() -> Quiver:
    return kronecker()


ACCEPTANCE: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        n = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
        ACCEPTANCE[n] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(f"{ACCEPTANCE[n]} criterion {n}")
