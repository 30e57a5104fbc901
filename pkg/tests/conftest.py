import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latrep import enumerate_lattices  # noqa: E402
from latrep import fixtures as fx  # noqa: E402

FIXTURE_NAMES = ["CHAIN2", "CHAIN3", "B2", "M3", "N5"]

_acceptance_lines = []


@pytest.fixture
def chain1():
    return fx.chain1()


@pytest.fixture
def chain2():
    return fx.chain2()


@pytest.fixture
def chain3():
    return fx.chain3()


@pytest.fixture
def b2():
    return fx.b2()


@pytest.fixture
def m3():
    return fx.m3()


@pytest.fixture
def n5():
    return fx.n5()


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_lattice(request):
    return fx.NAMED[request.param]()


@pytest.fixture(scope="session")
def lattices_upto7():
    """The 78 isomorphism classes of lattices with 1..7 elements."""
    return [L for n in range(1, 8) for L in enumerate_lattices(n)]


@pytest.fixture
def acceptance_line():
    def record(number, ok, text):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
