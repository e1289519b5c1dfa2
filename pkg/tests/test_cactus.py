import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import connected_graphs, to_nx
from locdom.cactus import (
    NotCactusError,
    blocks,
    cactus_stats,
    is_cactus,
    random_cactus,
    tightness_check,
)
from locdom.graph import GraphError, make_graph


def cycle_edges(vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def test_c4(c4):
    assert is_cactus(c4)
    st = cactus_stats(c4)
    assert (st.cc, st.cy, st.ex) == (1, 1, 0)
    assert st.euler_identity() and st.excess_identity() and st.lower_bound()


def test_k4_is_not_cactus(k4):
    assert not is_cactus(k4)
    with pytest.raises(NotCactusError):
        cactus_stats(k4)


def test_two_c4_sharing_vertex():
    g = make_graph(7, cycle_edges([0, 1, 2, 3]) + cycle_edges([0, 4, 5, 6]))
    assert is_cactus(g)
    st = cactus_stats(g)
    assert (st.cc, st.cy, st.ex) == (1, 2, 0)
    # 4 * 7 == 3 * 8 + 4
    assert tightness_check(g)


def test_tree():
    g = make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    st = cactus_stats(g)
    assert (st.cc, st.cy, st.ex) == (1, 0, 4)
    assert st.excess_identity()


def test_disjoint_c4s():
    g = make_graph(8, cycle_edges([0, 1, 2, 3]) + cycle_edges([4, 5, 6, 7]))
    st = cactus_stats(g)
    assert (st.cc, st.cy, st.ex) == (2, 2, 0)
    assert st.euler_identity() and st.excess_identity()
    with pytest.raises(GraphError):
        tightness_check(g)


def test_tightness_examples():
    chain = make_graph(10, cycle_edges([0, 1, 2, 3]) + cycle_edges([3, 4, 5, 6]) + cycle_edges([6, 7, 8, 9]))
    assert tightness_check(chain)
    assert not tightness_check(make_graph(6, cycle_edges(list(range(6)))))
    assert not tightness_check(make_graph(5, cycle_edges([0, 1, 2, 3]) + [(0, 4)]))


def test_tightness_rejects_odd_cycle():
    with pytest.raises(GraphError, match="bipartite"):
        tightness_check(make_graph(3, cycle_edges([0, 1, 2])))


def _nx_blocks(g):
    return sorted(sorted(tuple(sorted(e)) for e in comp) for comp in nx.biconnected_component_edges(to_nx(g)))


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=8))
def test_blocks_match_networkx(g):
    assert sorted(sorted(b) for b in blocks(g)) == _nx_blocks(g)
    expect = all(
        len(b) == 1 or all(d == 2 for _, d in nx.Graph(b).degree())
        for b in nx.biconnected_component_edges(to_nx(g))
    )
    assert is_cactus(g) == expect


@pytest.mark.parametrize("seed", range(20))
def test_random_cactus_identities(seed):
    rng = random.Random(seed)
    bip = seed % 2 == 0
    g = random_cactus(rng, n_blocks=rng.randint(1, 8), bipartite=bip, components=1 + seed % 3)
    assert is_cactus(g)
    st = cactus_stats(g)
    assert st.euler_identity() and st.excess_identity()
    if st.cc == 1:
        assert st.lower_bound()
    if bip:
        assert nx.is_bipartite(to_nx(g))
    if bip and st.cc == 1:
        blocks_c4 = all(len(b) == 4 for b in blocks(g))
        assert tightness_check(g) == blocks_c4


def test_random_cactus_rejects_odd_lengths_for_bipartite():
    with pytest.raises(ValueError):
        random_cactus(random.Random(0), 3, bipartite=True, cycle_lengths=(3, 4))
