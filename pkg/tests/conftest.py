import itertools
import sys

import pytest
from hypothesis import strategies as st

from cayleydim.graph import Graph

INF = float("inf")


def floyd_warshall(graph: Graph):
    """Independent all-pairs oracle (no BFS)."""
    n = graph.vertex_count
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in graph.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            for j in range(n):
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return d


def brute_dimension(graph: Graph):
    """Smallest k with a resolving k-subset, trying every subset."""
    d = floyd_warshall(graph)
    n = graph.vertex_count
    if n == 1:
        return 0, ()
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            if len({tuple(d[v][w] for w in subset) for v in range(n)}) == n:
                return k, subset
    raise AssertionError("V itself always resolves")


def brute_resolving_pairs(graph: Graph):
    d = floyd_warshall(graph)
    n = graph.vertex_count
    return [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if len({(d[x][u], d[x][v]) for x in range(n)}) == n
    ]


def has_odd_closed_walk(graph: Graph) -> bool:
    """Non-bipartite iff some closed walk of odd length <= n exists (matrix powers)."""
    n = graph.vertex_count
    adj = [[1 if graph.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    power = adj
    a2 = mul(adj, adj)
    for length in range(1, n + 1, 2):
        if any(power[i][i] for i in range(n)):
            return True
        power = mul(power, a2)
    return False


def permutation_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    e2 = {frozenset(e) for e in g2.edges()}
    return any(
        all(frozenset((p[u], p[v])) in e2 for u, v in g1.edges())
        for p in itertools.permutations(range(g1.vertex_count))
    )


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8, connected=False):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # random spanning tree first
        for v in range(1, n):
            u = draw(st.integers(min_value=0, max_value=v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def c6():
    from cayleydim.families import cycle

    return cycle(6)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(results):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} - {detail}")
