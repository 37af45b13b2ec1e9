import sys

import pytest
from hypothesis import HealthCheck, settings

from opencat.harness import fixtures

settings.register_profile(
    "default", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def cat2():
    return fixtures.cat2()


@pytest.fixture
def dag3():
    return fixtures.dag3()


@pytest.fixture
def p2():
    return fixtures.p2()


@pytest.fixture
def of2():
    return fixtures.of2()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1])):
            terminalreporter.write_line(line)
