import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from tropgreen.matrix import Matrix
from tropgreen.semiring import ZERO

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

finite = st.fractions(min_value=-10, max_value=10, max_denominator=4)
value = st.one_of(st.just(ZERO), finite)


@st.composite
def matrices(draw, n=None, max_n=4, upper=False, unit=False, positive=False, zero=True):
    if n is None:
        n = draw(st.integers(1, max_n))
    entry = value if zero else finite
    if positive:
        entry = st.fractions(min_value=0, max_value=10, max_denominator=4)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if upper and j < i:
                row.append(ZERO)
            elif unit and i == j:
                row.append(Fraction(0))
            elif upper and i == j:
                row.append(draw(finite))
            else:
                row.append(draw(entry))
        rows.append(row)
    return Matrix(rows)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
