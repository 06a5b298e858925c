import pytest

from sylowgraph.oracles import closure


def element_set(G):
    """Every element of ``G`` as a plain tuple, by brute-force closure."""
    return {tuple(g) for g in closure(G.generators, G.degree)}


@pytest.fixture(scope="session")
def elems():
    cache = {}

    def get(G):
        key = (G.degree, tuple(map(tuple, G.generators)))
        if key not in cache:
            cache[key] = element_set(G)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, line = RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {line}")
