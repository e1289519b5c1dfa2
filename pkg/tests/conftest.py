from __future__ import annotations

import sys
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from locdom.graph import Graph, make_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# --- brute-force oracles, deliberately naive and independent of the package ---


def brute_traces(g: Graph, s) -> list[frozenset]:
    s = set(s)
    return [frozenset(set(g.neighbors(v)) & s) for v in range(g.n) if v not in s]


def brute_is_ld(g: Graph, s) -> bool:
    tr = brute_traces(g, s)
    return all(tr) and len(set(tr)) == len(tr)


def brute_lambda(g: Graph) -> int:
    for k in range(g.n + 1):
        if any(brute_is_ld(g, c) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError


def brute_complement(g: Graph) -> Graph:
    return make_graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def brute_lambda_global(g: Graph) -> int:
    gc = brute_complement(g)
    for k in range(g.n + 1):
        if any(brute_is_ld(g, c) and brute_is_ld(gc, c) for c in combinations(range(g.n), k)):
            return k
    raise AssertionError


def brute_canon(g: Graph) -> tuple:
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n, best)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    # chain the components together to force connectivity
    comps = [min(c) for c in nx.connected_components(to_nx(g))]
    return make_graph(g.n, g.edges() + list(zip(comps, comps[1:])))


@pytest.fixture
def p4():
    # a-b-c-d as 0-1-2-3
    return make_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star3():
    # K_{1,3}: hub 0, leaves 1, 2, 3
    return make_graph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def c4():
    return make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k4():
    return make_graph(4, list(combinations(range(4), 2)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
