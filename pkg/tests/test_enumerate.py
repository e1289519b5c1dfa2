from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import brute_canon, graphs, to_nx
from locdom.enumerate import (
    EnumerationCapError,
    canonical_form,
    canonical_order,
    enumerate_connected_graphs,
)
from locdom.graph import make_graph


def brute_connected_classes(n, bipartite_only=False):
    """Isomorphism classes of connected graphs from all labelled graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = make_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        h = to_nx(g)
        if not nx.is_connected(h):
            continue
        if bipartite_only and not nx.is_bipartite(h):
            continue
        seen.add(brute_canon(g))
    return seen


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("bipartite_only", [False, True])
def test_matches_brute_force(n, bipartite_only):
    got = {brute_canon(g) for g in enumerate_connected_graphs(n, bipartite_only)}
    assert got == brute_connected_classes(n, bipartite_only)


def test_known_counts():
    assert [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [sum(1 for _ in enumerate_connected_graphs(n, True)) for n in range(1, 9)] == [1, 1, 1, 3, 5, 17, 44, 182]


def test_pairwise_non_isomorphic_n6():
    gs = list(enumerate_connected_graphs(6))
    by_inv = {}
    for g in gs:
        key = (g.num_edges, tuple(sorted(g.degree(v) for v in range(g.n))))
        by_inv.setdefault(key, []).append(to_nx(g))
    for bucket in by_inv.values():
        for a, b in combinations(bucket, 2):
            assert not nx.is_isomorphic(a, b)


def test_outputs_are_connected_and_deterministic():
    first = list(enumerate_connected_graphs(5))
    assert first == list(enumerate_connected_graphs(5))
    assert all(g.is_connected() for g in first)


def test_cap_refusal():
    with pytest.raises(EnumerationCapError) as exc:
        next(enumerate_connected_graphs(9))
    assert "graph6" in str(exc.value)
    with pytest.raises(EnumerationCapError):
        next(enumerate_connected_graphs(11, bipartite_only=True))


@settings(max_examples=200)
@given(graphs(max_n=7))
def test_canonical_form_is_isomorphism_invariant(g):
    # relabel by the canonical order and by a reversal; the key must agree
    rev = make_graph(g.n, [(g.n - 1 - u, g.n - 1 - v) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(rev)
    order = canonical_order(g)
    assert sorted(order) == list(range(g.n))


@settings(max_examples=100)
@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_separates_non_isomorphic(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same
