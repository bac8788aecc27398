import itertools

from hypothesis import HealthCheck, assume, settings, strategies as st

from beit.graphs import Graph

settings.register_profile(
    "beit", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("beit")


@st.composite
def graphs(draw, min_n=1, max_n=5, connected=None, noncomplete=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, frozenset(p for p, b in zip(pairs, bits) if b))
    if connected is not None:
        assume(g.is_connected() == connected)
    if noncomplete:
        assume(not g.is_complete())
    return g


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
