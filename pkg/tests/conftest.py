import pytest
from hypothesis import strategies as st

from diamond_exact.quiver import Interval, TypeAQuiver, build_type_a


@pytest.fixture(scope="session")
def rlrr() -> TypeAQuiver:
    """1 -> 2 <- 3 -> 4 -> 5, the running example."""
    return build_type_a(5, "RLRR")


def iv(lo: int, hi: int) -> Interval:
    return Interval(lo, hi)


@st.composite
def quivers(draw, min_n: int = 2, max_n: int = 6) -> TypeAQuiver:
    n = draw(st.integers(min_n, max_n))
    word = draw(st.text(alphabet="RL", min_size=n - 1, max_size=n - 1))
    return TypeAQuiver(n, word)


@st.composite
def quiver_and_interval(draw, min_n: int = 2, max_n: int = 6):
    Q = draw(quivers(min_n, max_n))
    lo = draw(st.integers(1, Q.n))
    hi = draw(st.integers(lo, Q.n))
    return Q, Interval(lo, hi)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_report", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
