import pytest
from hypothesis import settings

from kerrlc.params import validate_params
from kerrlc.sequence import PeriodicSequence

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

EXAMPLE1_DIGITS = "1210100012 1202102202 1122112121 2121012101 2102110100"

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def example1():
    return PeriodicSequence.from_string(validate_params(5, 2, 3), EXAMPLE1_DIGITS)


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
