from fractions import Fraction

import pytest
from hypothesis import strategies as st

from contfrob.intervals import IntervalUnion, OpenInterval, normalize

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    """Record a one-line verdict for the acceptance summary."""
    def record(number, title, ok, detail=""):
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}"
        if detail:
            line += f" ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def F(s):
    return Fraction(s)


def U(*pairs):
    return IntervalUnion.of(*pairs)


@st.composite
def raw_intervals(draw, q=None, max_parts=5, lo=0, hi=1):
    """Raw list of open intervals with endpoints on a small grid in [lo, hi]."""
    q = q or draw(st.sampled_from([2, 3, 4, 6, 8, 12]))
    n = draw(st.integers(1, max_parts))
    cells = (hi - lo) * q
    out = []
    for _ in range(n):
        a = draw(st.integers(0, cells - 1))
        b = draw(st.integers(a + 1, cells))
        out.append((Fraction(a, q) + lo, Fraction(b, q) + lo))
    return out


@st.composite
def unions(draw, **kw):
    return normalize(OpenInterval(a, b) for a, b in draw(raw_intervals(**kw)))


positive_rationals = st.builds(Fraction, st.integers(1, 30), st.integers(1, 12))
