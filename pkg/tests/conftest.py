import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polycrystal.crystal import CrystalContext  # noqa: E402
from polycrystal.rootdata import CartanMatrix, Weight  # noqa: E402
from polycrystal.sequence import IotaSequence  # noqa: E402

import oracles  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def make_ctx(rows, m, prefix=(), cycle=(1, 2)):
    return CrystalContext(CartanMatrix.from_rows(rows), IotaSequence(tuple(prefix), tuple(cycle)), Weight(tuple(m)))


@pytest.fixture
def a2():
    return CartanMatrix.from_rows(oracles.A2)


@pytest.fixture
def a3():
    return CartanMatrix.from_rows(oracles.A3)


@pytest.fixture
def alt():
    return IotaSequence.periodic(1, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
