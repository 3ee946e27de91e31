import numpy as np
import pytest
from hypothesis import strategies as st

from posetcut.generators import random_dag


@st.composite
def posets(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    prob = draw(st.floats(0.0, 1.0))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_dag(n, prob, seed)


@st.composite
def shuffled_posets(draw, max_n=9):
    """Random posets whose labels are not a linear extension."""
    p = draw(posets(max_n))
    perm = np.array(draw(st.permutations(range(p.n)))) if p.n else np.arange(0)
    from posetcut.core import Poset
    rel = np.zeros_like(p.rel)
    rel[np.ix_(perm, perm)] = p.rel
    return Poset(rel)


def pytest_configure(config):
    from hypothesis import settings
    settings.register_profile("default", max_examples=150, deadline=None)
    settings.load_profile("default")


@pytest.fixture
def chain4():
    from posetcut.generators import chain
    return chain(4)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
