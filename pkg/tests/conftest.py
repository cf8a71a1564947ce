from fractions import Fraction

from hypothesis import settings, strategies as st

from matchgates.pfaffian import SkewGraph

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def skew_graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SkewGraph(n, {p: draw(rationals) for p in chosen})


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
