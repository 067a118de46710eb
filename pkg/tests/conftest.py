import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fintop import discrete, indiscrete, validate_topology  # noqa: E402
from fintop.theorems import example2_spaces  # noqa: E402


@pytest.fixture
def sierpinski():
    return validate_topology(["a", "b"], [[], ["a"], ["a", "b"]])


@pytest.fixture
def disc2():
    return discrete(["a", "b"])


@pytest.fixture
def example2():
    return example2_spaces()


@pytest.fixture
def split3():
    # {a} and {b,c} are both clopen.
    return validate_topology("abc", [[], ["a"], ["b", "c"], ["a", "b", "c"]])


@pytest.fixture
def point():
    return indiscrete(["p"])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
