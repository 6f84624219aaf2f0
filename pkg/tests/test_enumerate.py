from collections import Counter

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_isomorphic
from cliquedual.enumerate import (
    DEDUP_MAX_VERTICES,
    canonical_code,
    enumerate_graphs,
    graphs_up_to,
    labeled_graphs,
    unlabeled_graphs,
)
from cliquedual.graph import Graph
from cliquedual.isomorphism import find_isomorphism, is_isomorphic, is_isomorphism

# number of graphs on n unlabeled vertices
KNOWN = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(unlabeled_graphs(n)) == KNOWN[n]


def test_counts_match_networkx_atlas():
    # the atlas lists every graph on 0..7 vertices
    by_n = Counter(g.number_of_nodes() for g in nx.graph_atlas_g())
    for n in range(1, 8):
        assert by_n[n] == len(unlabeled_graphs(n))


@pytest.mark.slow
def test_count_8():
    assert DEDUP_MAX_VERTICES >= 8
    assert len(unlabeled_graphs(8)) == 12346


def test_labeled_counts():
    for n in range(1, 6):
        assert sum(1 for _ in labeled_graphs(n)) == 2 ** (n * (n - 1) // 2)
    with pytest.raises(ValueError):
        next(labeled_graphs(8))


def test_labeled_dedups_to_classes():
    for n in range(1, 6):
        codes = {canonical_code(g) for g in labeled_graphs(n)}
        assert len(codes) == KNOWN[n]


def test_representatives_pairwise_non_isomorphic():
    gs = unlabeled_graphs(5)
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            assert not brute_isomorphic(a, b)


@given(graphs(1, 8), graphs(1, 8))
def test_canonical_code_is_complete_invariant(a, b):
    assert (canonical_code(a) == canonical_code(b)) == brute_isomorphic(a, b)
    assert is_isomorphic(a, b) == brute_isomorphic(a, b)


@given(graphs(2, 9))
def test_relabeling_preserves_code(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert canonical_code(h) == canonical_code(g)
    f = find_isomorphism(g, h)
    assert f is not None and is_isomorphism(g, h, f)


def test_enumerate_and_graphs_up_to():
    assert list(enumerate_graphs(3)) == unlabeled_graphs(3)
    assert sum(1 for _ in enumerate_graphs(3, dedup=False)) == 8
    assert sum(1 for _ in graphs_up_to(5)) == sum(KNOWN[k] for k in range(1, 6))
    with pytest.raises(ValueError):
        unlabeled_graphs(DEDUP_MAX_VERTICES + 1)
    with pytest.raises(ValueError):
        unlabeled_graphs(0)


def test_isomorphism_size_cap():
    from cliquedual.errors import BudgetExceeded

    g = Graph.edgeless(20)
    with pytest.raises(BudgetExceeded):
        is_isomorphic(g, g)
