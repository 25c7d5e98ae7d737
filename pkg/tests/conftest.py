from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from congruent6.elliptic import Curve
from congruent6.errors import SingularCurveError

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
nonzero_rationals = rationals.filter(bool)


@st.composite
def curves(draw, rats=rationals):
    a, b = draw(rats), draw(rats)
    try:
        return Curve(a, b)
    except SingularCurveError:
        return Curve(a + 1, b + 1) if 4 * (a + 1) ** 3 + 27 * (b + 1) ** 2 else Curve(1, 1)


projective_pairs = st.tuples(small_ints, small_ints).filter(lambda uv: uv != (0, 0))


# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
