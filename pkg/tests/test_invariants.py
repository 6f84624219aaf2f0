from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_matching, brute_max_independent, subsets
from cliquedual.enumerate import graphs_up_to
from cliquedual.errors import BudgetExceeded
from cliquedual.families import corona, cycle, path, twin_expanded_corona
from cliquedual.graph import Graph, is_triangle_free, is_twin_free, isolated_vertices
from cliquedual.invariants import (
    EXACT_MAX_VERTICES,
    clique_cover_number,
    independence_number,
    is_konig_egervary,
    is_localizable,
    is_semi_perfect,
    is_strong_clique,
    is_well_covered,
    localizable_partition,
    matching_number,
    maximal_independent_sets,
    strong_cliques,
    vertex_cover_number,
)
from cliquedual.recognizers import recognize_triangle_free_cdc


def _brute_cover(G: Graph) -> int:
    # smallest number of cliques partitioning V, via DP over subsets
    full = G.vertex_mask
    best = {0: 0}
    for s in range(1, full + 1):
        low = s & -s
        b = G.n
        for c in subsets(s):
            if c & low and G.is_clique(c) and best[s & ~c] + 1 < b:
                b = best[s & ~c] + 1
        best[s] = b
    return best[full]


@given(graphs(1, 8))
def test_alpha_nu_tau(g):
    assert independence_number(g) == brute_max_independent(g)
    assert matching_number(g) == brute_matching(g)
    assert vertex_cover_number(g) == g.n - brute_max_independent(g)
    assert matching_number(g) <= vertex_cover_number(g)


@given(graphs(1, 7))
def test_clique_cover(g):
    assert clique_cover_number(g) == _brute_cover(g)
    assert clique_cover_number(g) >= independence_number(g)
    assert is_semi_perfect(g) == (clique_cover_number(g) == independence_number(g))


@given(graphs(1, 8))
def test_well_covered_definition(g):
    sizes = {bin(s).count("1") for s in maximal_independent_sets(g)}
    assert is_well_covered(g) == (len(sizes) == 1)


def test_bipartite_graphs_are_konig_egervary():
    for g in graphs_up_to(7):
        if is_triangle_free(g) and _is_bipartite(g):
            assert is_konig_egervary(g)


def _is_bipartite(g: Graph) -> bool:
    import networkx as nx

    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    return nx.is_bipartite(h)


def test_odd_cycles():
    c5 = cycle(5)
    assert (independence_number(c5), matching_number(c5), clique_cover_number(c5)) == (2, 2, 3)
    assert not is_konig_egervary(c5) and not is_localizable(c5) and is_well_covered(c5)


def test_twin_expanded_corona_c5_invariants():
    g = twin_expanded_corona(cycle(5))
    assert (matching_number(g), independence_number(g), vertex_cover_number(g)) == (7, 7, 8)
    assert not is_konig_egervary(g)


@given(graphs(1, 7))
def test_strong_cliques_definition(g):
    mis = maximal_independent_sets(g)
    strong = set(strong_cliques(g))
    for k in range(1, 3):
        for c in combinations(range(g.n), k):
            m = sum(1 << v for v in c)
            expect = g.is_clique(m) and all(s & m for s in mis)
            assert is_strong_clique(g, m) == expect
            assert (m in strong) == expect


@given(graphs(1, 7))
def test_localizable_partition_is_valid(g):
    p = localizable_partition(g)
    if p is None:
        return
    union = 0
    for c in p:
        assert union & c == 0 and is_strong_clique(g, c)
        union |= c
    assert union == g.vertex_mask


def test_corona_is_localizable():
    for h in (path(3), cycle(5), cycle(7)):
        g = corona(h)
        p = localizable_partition(g)
        assert p is not None and len(p) == h.n


def test_twin_free_triangle_free_cdc_diagnostics():
    for g in graphs_up_to(7):
        if g.n < 2 or not is_triangle_free(g) or not is_twin_free(g) or isolated_vertices(g):
            continue
        if recognize_triangle_free_cdc(g).is_cdc:
            assert is_konig_egervary(g) and is_well_covered(g) and is_localizable(g)


def test_size_cap():
    with pytest.raises(BudgetExceeded):
        independence_number(Graph.edgeless(EXACT_MAX_VERTICES + 1))
