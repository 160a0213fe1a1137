import pytest

from injrad.algebra import (
    KupischSeries,
    PathWord,
    Quiver,
    build_monomial_algebra,
    nakayama_from_kupisch,
    radical_square_zero,
)
from injrad.exactlinalg import FieldSpec

F101 = FieldSpec(101)


def a2_algebra(field=F101):
    return build_monomial_algebra(field, Quiver.from_edges(2, [(1, 2)]))


def truncated_loop(power, field=F101):
    """k[x]/(x^power)."""
    q = Quiver.from_edges(1, [(1, 1)])
    return build_monomial_algebra(field, q, [PathWord(1, (0,) * power)])


def kupisch(shape, *lengths, field=F101):
    return nakayama_from_kupisch(field, KupischSeries(shape, tuple(lengths)))


def radsq(n, edges, field=F101):
    return radical_square_zero(field, Quiver.from_edges(n, edges))


@pytest.fixture
def a2():
    return a2_algebra()


@pytest.fixture
def dual_numbers():
    return truncated_loop(2)


@pytest.fixture
def k221():
    return kupisch("linear", 2, 2, 1)


# acceptance criteria register their outcome here; the lines are printed at the end
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
