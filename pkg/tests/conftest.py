import os

import pytest
from hypothesis import settings

from nakalab.generate import lambda_t, load_fixture

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def ex24():
    return load_fixture("ex2_4.quiver")


@pytest.fixture(scope="session")
def d4():
    return load_fixture("d4.quiver")


@pytest.fixture(scope="session")
def lam2():
    return lambda_t(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
