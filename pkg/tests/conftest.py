import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperembed.corpus import alternating, dihedral, parse_group, quaternion8, symmetric  # noqa: E402
from hyperembed.sigma import SigmaPartition  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def A4():
    return alternating(4)


@pytest.fixture
def S4():
    return symmetric(4)


@pytest.fixture
def A5():
    return alternating(5)


@pytest.fixture
def D8():
    return dihedral(8)


@pytest.fixture
def Q8():
    return quaternion8()


@pytest.fixture
def S3():
    return symmetric(3)


@pytest.fixture
def sig():
    return SigmaPartition.parse


@pytest.fixture
def group():
    return parse_group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
