import cmath
import itertools

import pytest
from hypothesis import strategies as st

from evenset import PitchClassSet


@st.composite
def pc_sets(draw, max_c=16, min_size=0):
    c = draw(st.integers(min_value=max(1, min_size), max_value=max_c))
    members = draw(st.sets(st.integers(0, c - 1), min_size=min_size))
    return PitchClassSet(c, tuple(members))


def brute_dft(c, members, t):
    """Term-by-term complex sum, kept independent of the numpy code path."""
    return sum(cmath.exp(-2j * cmath.pi * k * t / c) for k in members)


def brute_ic(c, members):
    return [sum(1 for x in members for y in members if (y - x) % c == k) for k in range(c)]


def subsets_of_size(c, d):
    return [PitchClassSet(c, s) for s in itertools.combinations(range(c), d)]


MAJOR = PitchClassSet(12, (0, 2, 4, 5, 7, 9, 11))
PENTATONIC = PitchClassSet(12, (0, 2, 4, 7, 9))
HARMONIC_MINOR = PitchClassSet(12, (0, 2, 3, 5, 7, 8, 11))
DIM7 = PitchClassSet(12, (0, 3, 6, 9))
TYPE3_18 = PitchClassSet(18, (0, 2, 4, 6, 9, 11, 13, 15))


@pytest.fixture
def major():
    return MAJOR


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
