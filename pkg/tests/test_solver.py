import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import brute_is_ld, brute_lambda, brute_lambda_global, connected_graphs, graphs
from locdom.closed_forms import QUANTITIES, check_closed_form_range, closed_form
from locdom.enumerate import enumerate_connected_graphs
from locdom.families import FamilyParameterError, FamilySpec, generate_family
from locdom.graph import GraphError, complement, make_graph
from locdom.solver import (
    NotLDSetError,
    analyze,
    counting_lower_bound,
    dominating_vertex,
    global_ld_number,
    is_dominating,
    is_global_ld_set,
    is_ld_set,
    ld_codes,
    ld_number,
    ld_number_complement,
    ld_sets_of_size,
    trace,
)


def test_p4_examples(p4):
    # a-b-c-d: {b, c} is an LD-set; {a, b} leaves d undominated
    assert is_ld_set(p4, [1, 2])
    assert trace(p4, 0, [1, 2]) == (1,)
    assert not is_dominating(p4, [0, 1])
    assert not is_ld_set(p4, [0, 1])
    assert ld_number(p4).value == 2


def test_star_dominating_vertex(star3):
    # S = {b, c} in K_{1,3} with hub a = 0: a sees both, d sees nothing
    assert not is_ld_set(star3, [1, 2])
    s = [1, 2, 3]
    assert is_ld_set(star3, s)
    assert dominating_vertex(star3, s) == 0
    assert not is_global_ld_set(star3, s)


def test_dominating_vertex_refuses_non_ld(star3):
    with pytest.raises(NotLDSetError) as exc:
        dominating_vertex(star3, [1])
    assert exc.value.vertex_set == (1,)


def test_set_as_mask(p4):
    assert is_ld_set(p4, 0b0110) == is_ld_set(p4, [1, 2])


def test_counting_lower_bound():
    # n - k <= 2^k - 1
    assert [counting_lower_bound(n) for n in (1, 2, 3, 4, 5, 7, 8, 11, 12)] == [1, 1, 2, 2, 2, 3, 3, 4, 4]
    for n in range(1, 40):
        k = counting_lower_bound(n)
        assert n - k <= 2**k - 1 and (k == 0 or n - (k - 1) > 2 ** (k - 1) - 1)


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        ld_number(make_graph(0))


def test_single_vertex():
    assert ld_number(make_graph(1)).value == 1


def test_all_small_graphs_against_oracle():
    """Exhaustive on connected graphs with n <= 6."""
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            lam = ld_number(g)
            assert lam.value == brute_lambda(g)
            assert brute_is_ld(g, lam.witness)
            assert ld_number_complement(g) == brute_lambda(complement(g))
            assert global_ld_number(g).value == brute_lambda_global(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_random_graphs_against_oracle(g):
    lam = ld_number(g)
    assert lam.value == brute_lambda(g)
    assert is_ld_set(g, lam.witness) and brute_is_ld(g, lam.witness)
    res = global_ld_number(g)
    assert res.value == brute_lambda_global(g)
    assert is_global_ld_set(g, res.witness)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=7))
def test_predicates_agree_with_oracle(g):
    rng = random.Random(g.num_edges * 31 + g.n)
    for _ in range(10):
        s = [v for v in range(g.n) if rng.random() < 0.5]
        assert is_ld_set(g, s) == brute_is_ld(g, s)
        info = analyze(g, s)
        assert info.is_ld == brute_is_ld(g, s)
        assert info.is_dominating == is_dominating(g, s)
        if info.is_ld:
            gc = complement(g)
            assert info.is_global == brute_is_ld(gc, s)
            assert info.is_global == (info.dominating_vertex is None)
        else:
            assert info.dominating_vertex is None and not info.is_global


def test_witness_is_lexicographically_first():
    g = generate_family(FamilySpec("path", n=7))
    first = next(c for c in combinations(range(7), 3) if brute_is_ld(g, c))
    assert ld_number(g).witness == first == (0, 3, 5)


def test_ld_codes_complete():
    g = generate_family(FamilySpec("cycle", n=6))
    k = ld_number(g).value
    brute = [c for c in combinations(range(6), k) if brute_is_ld(g, c)]
    assert ld_codes(g) == brute


def test_global_only_sets(star3):
    got = list(ld_sets_of_size(star3, 3, global_only=True))
    brute = [c for c in combinations(range(4), 3) if brute_is_ld(star3, c) and brute_is_ld(complement(star3), c)]
    assert got == brute


@pytest.mark.parametrize(
    "spec,values",
    [
        (FamilySpec("path", n=7), (3, 3, 3)),
        (FamilySpec("cycle", n=10), (4, 4, 4)),
        (FamilySpec("wheel", n=8), (3, 4, 4)),
        (FamilySpec("complete", n=5), (4, 5, 5)),
        (FamilySpec("star", n=6), (5, 5, 5)),
        (FamilySpec("complete_bipartite", r=2, s=3), (3, 3, 3)),
        (FamilySpec("bistar", r=3, s=3), (4, 3, 4)),
    ],
)
def test_closed_form_examples(spec, values):
    assert tuple(closed_form(spec, q) for q in QUANTITIES) == values
    g = generate_family(spec)
    assert (ld_number(g).value, ld_number_complement(g), global_ld_number(g).value) == values


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("path", n=6),
        FamilySpec("wheel", n=7),
        FamilySpec("star", n=3),
        FamilySpec("complete_bipartite", r=1, s=4),
        FamilySpec("bistar", r=2, s=4),
    ],
)
def test_closed_form_range(spec):
    with pytest.raises(FamilyParameterError):
        check_closed_form_range(spec)


def test_closed_form_unknown_quantity():
    with pytest.raises(ValueError, match="unknown quantity"):
        closed_form(FamilySpec("path", n=8), "gamma")
