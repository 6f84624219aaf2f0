from itertools import combinations

import pytest

from oracles import brute_cliques, brute_transversals
from cliquedual.bits import mask_of
from cliquedual.families import (
    FAMILIES,
    FamilySpec,
    anticomb,
    band,
    cobip_matching,
    comb,
    corona,
    cycle,
    generate,
    path,
    settled_comb,
    subdiv_star,
    twin_expanded_corona,
)
from cliquedual.graph import (
    clique_dual,
    clique_hypergraph,
    complement,
    components,
    is_cdc_bruteforce,
    is_split,
    is_triangle_free,
    minimal_clique_transversals,
)
from cliquedual.isomorphism import is_isomorphic


def _masks(sets):
    return sorted(mask_of(s) for s in sets)


def _dual(g):
    return sorted(minimal_clique_transversals(g).edges)


def test_comb_2_is_p4():
    assert is_isomorphic(comb(2), path(4))
    assert is_isomorphic(anticomb(2), path(4))
    assert is_isomorphic(cobip_matching(1), path(4))


def test_anticomb_cliques_and_dual():
    n = 4
    g = anticomb(n)
    u = list(range(n))
    want = [u] + [[x for x in u if x != i] + [n + i] for i in range(n)]
    assert sorted(clique_hypergraph(g).edges) == _masks(want)
    want_d = [list(p) for p in combinations(u, 2)] + [[i, n + i] for i in range(n)]
    assert _dual(g) == _masks(want_d)
    # the clique-dual is a comb
    assert is_isomorphic(clique_dual(g), comb(n))


def test_cobip_matching_dual_formula():
    n = 4
    g = cobip_matching(n)
    C = list(range(n + 1))
    D = list(range(n + 1, 2 * n + 2))
    assert sorted(clique_hypergraph(g).edges) == _masks([C, D] + [[i, n + 1 + i] for i in range(1, n + 1)])
    us = C[1:]
    want = [[C[0]] + D[1:], [D[0]] + C[1:]]
    for k in range(1, n):
        for S in combinations(us, k):
            f = [n + 1 + j for j in us if j not in S]
            want.append(list(S) + f)
    assert _dual(g) == _masks(want)
    assert is_cdc_bruteforce(g).is_cdc


def test_subdiv_star_4():
    g = subdiv_star(4)
    assert g.n == 10 and g.m == 9 and len(components(g)) == 1
    assert sorted(clique_hypergraph(g).edges) == sorted((1 << a) | (1 << b) for a, b in g.edges())
    n, v0 = 4, 5
    us = list(range(1, n + 1))
    want = [[v0] + us]
    for k in range(n + 1):
        for S in combinations(us, k):
            want.append([0] + list(S) + [v0 + j for j in us if j not in S])
    assert _dual(g) == _masks(want)
    gc = clique_dual(g)
    assert is_isomorphic(gc, complement(g))
    # the minimal clique transversals of G^c are the edges of G
    assert sorted(minimal_clique_transversals(gc).edges) == sorted(clique_hypergraph(g).edges)


def test_band_5():
    n = 5
    g = band(n)
    cl = clique_hypergraph(g)
    assert g.n == 10 and cl.m == n + 1
    assert all(bin(e).count("1") == n for e in cl.edges)
    want = [[i - 1, j - 1] for i in range(1, n + 1) for j in range(n + 1, n + i + 1)]
    assert _dual(g) == _masks(want)
    assert is_cdc_bruteforce(g).is_cdc


@pytest.mark.parametrize("name", [f for f in FAMILIES if f != "corona"])
def test_generators_agree_with_brute_cliques(name):
    for n in range(2, 5):
        if name == "cycle" and n < 3:
            continue
        g = generate(f"{name}:{n}")
        assert sorted(clique_hypergraph(g).edges) == sorted(brute_cliques(g))
        C = clique_hypergraph(g)
        assert _dual(g) == sorted(brute_transversals(g.n, C.edges))


def test_split_families_are_split():
    for n in range(1, 6):
        for f in ("comb", "anticomb", "settled_comb", "settled_anticomb"):
            assert is_split(generate(f"{f}:{n}"))


def test_settled_comb_extends_one_clique():
    g = settled_comb(3)
    cl = clique_hypergraph(g).edge_sets()
    assert (0, 1, 2, 3) in cl and len(cl) == 4


def test_corona_layout():
    g = corona(cycle(5))
    assert g.n == 10 and is_triangle_free(g)
    assert all(g.adj[5 + i] == 1 << i for i in range(5))


def test_twin_expanded_corona_c5():
    g = twin_expanded_corona(cycle(5))
    assert g.n == 15 and is_triangle_free(g)
    for i in range(5):
        assert g.adj[2 * i] == g.adj[2 * i + 1]
        assert g.adj[10 + i] == (1 << 2 * i) | (1 << 2 * i + 1)


def test_familyspec_parse_roundtrip():
    for text in ("comb:3", "band:2", "corona:cycle:5", "corona:corona:path:2"):
        spec = FamilySpec.parse(text)
        assert str(spec) == text
        assert generate(text) == spec.build()
    assert generate("corona:path:3") == corona(path(3))


@pytest.mark.parametrize("text", ["comb", "comb:x", "nope:3", "band:1", "cycle:2", "comb:0", "corona"])
def test_familyspec_rejects(text):
    with pytest.raises(ValueError):
        FamilySpec.parse(text)
