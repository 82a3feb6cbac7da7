import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gately import Game, fixture_games


@pytest.fixture(scope="session")
def fixtures():
    return fixture_games()


def small_fractions(bound=12):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 4))


@st.composite
def games(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    table = draw(st.lists(small_fractions(), min_size=(1 << n) - 1, max_size=(1 << n) - 1))
    return Game(n, (Fraction(0), *table))


def shapley_by_permutations(g):
    """Average marginal vector over all n! arrival orders."""
    totals = [Fraction(0)] * g.n
    count = 0
    for order in itertools.permutations(range(g.n)):
        s = 0
        for i in order:
            totals[i] += g.worths[s | 1 << i] - g.worths[s]
            s |= 1 << i
        count += 1
    return tuple(t / count for t in totals)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(line)
