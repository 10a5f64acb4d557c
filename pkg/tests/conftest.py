import functools

import pytest

from dengue_control.integrator import simulate
from dengue_control.model import ModelParameters, initial_state
from dengue_control.schedule import Constant, Pulsed, Zero

HORIZON = 84.0
STEP = 0.01


@pytest.fixture(scope="session")
def params():
    return ModelParameters()


@pytest.fixture(scope="session")
def x0(params):
    return initial_state(params)


@functools.lru_cache(maxsize=None)
def _run(schedule, extra=()):
    p = ModelParameters()
    return simulate(p, initial_state(p), schedule, HORIZON, STEP, extra_breaks=extra)


@pytest.fixture(scope="session")
def run():
    """Cached paper-scenario simulation keyed by schedule (and extra breaks)."""
    return _run


@pytest.fixture(scope="session")
def schedules():
    return {
        "zero": Zero(),
        "constant": Constant(0.084),
        7: Pulsed(7),
        11: Pulsed(11),
        12: Pulsed(12),
        15: Pulsed(15),
        30: Pulsed(30),
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
