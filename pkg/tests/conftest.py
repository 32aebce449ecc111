import itertools

import pytest
from hypothesis import strategies as st

from metricdim.graph import Graph, is_connected

INF = float("inf")

# criterion number -> (description, passed); filled by test_acceptance.py
ACCEPTANCE = {}


def floyd_warshall(g):
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def brute_cut_vertices(g):
    cuts = set()
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub, _ = g.induced_subgraph(keep)
        if not is_connected(sub):
            cuts.add(v)
    return cuts


def all_connected_graphs(max_n):
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if is_connected(g):
                yield g


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=True):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected and n > 1:
        # random spanning tree first, then extra edges
        tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    else:
        tree = []
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, set(tree) | set(extra))


@pytest.fixture
def c4():
    from metricdim.constructions import cycle

    return cycle(4)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}")
