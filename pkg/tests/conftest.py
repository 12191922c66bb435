import numpy as np
import pytest
from hypothesis import settings

from adlp import codes

settings.register_profile("ci", max_examples=30, deadline=None)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile("ci")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def leung():
    return codes.leung4()


@pytest.fixture(scope="session")
def shor():
    return codes.shor9()


@pytest.fixture
def rng():
    return np.random.default_rng(20201016)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
