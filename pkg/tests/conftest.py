import os

import pytest
from hypothesis import HealthCheck, settings

from lozenge_shuffle.regions import Trapezoid, validate_hexagon

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")

# Lines filled in by test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES = {}


@pytest.fixture
def hex_source():
    return validate_hexagon(3, 8, 4, [2, 3, 5, 8, 9, 11], [3, 7])


@pytest.fixture
def hex_target():
    return validate_hexagon(6, 5, 7, [3, 7, 9], [2, 3, 5, 8, 11])


@pytest.fixture
def trapezoid_example():
    return Trapezoid(8, 5, [1, 4, 5, 9, 12])


@pytest.fixture
def sym_source():
    return validate_hexagon(5, 9, 9, [2, 4, 6, 8, 11], [4, 7, 9, 11, 13])


@pytest.fixture
def sym_target():
    return validate_hexagon(5, 9, 9, [4, 8, 9, 11, 13], [2, 4, 6, 7, 11])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
