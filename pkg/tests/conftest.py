import itertools

import pytest

from steiner_ecc.graph import Graph


def path(n, weights=None):
    return Graph.from_edges(n, [(i, i + 1, *( (weights[i],) if weights else ())) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def star(weights):
    return Graph.from_edges(len(weights) + 1, [(0, i + 1, w) for i, w in enumerate(weights)])


# a=0, b=1, c=2, d=3, e=4
TWO_TRIANGLES = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])

# center 0; legs of length 3, 2, 1
SPIDER = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6)])


@pytest.fixture
def two_triangles():
    return TWO_TRIANGLES


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(results):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
