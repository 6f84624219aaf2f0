"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from cliquedual.graph import Graph


def subsets(mask: int):
    """All submasks of ``mask``, including 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def brute_transversals(n: int, edges) -> list[int]:
    """Minimal transversals by checking every vertex subset."""
    edges = list(edges)
    hitting = [s for s in range(1 << n) if all(s & e for e in edges)]
    hs = set(hitting)
    return sorted(s for s in hitting if not any((s & ~(1 << v)) in hs for v in range(n) if s >> v & 1))


def brute_cliques(G: Graph) -> list[int]:
    cliques = [s for s in range(1, 1 << G.n) if G.is_clique(s)]
    cs = set(cliques)
    return sorted(c for c in cliques if not any((c | 1 << v) in cs for v in range(G.n) if not c >> v & 1))


def brute_max_independent(G: Graph) -> int:
    return max(bin(s).count("1") for s in range(1 << G.n) if G.is_independent(s))


def brute_matching(G: Graph) -> int:
    edges = G.edges()

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        skip = best(i + 1, used)
        if not (used >> u & 1 or used >> v & 1):
            return max(skip, 1 + best(i + 1, used | 1 << u | 1 << v))
        return skip

    return best(0, 0)


def brute_conformal(n: int, edges) -> bool:
    """Every set of pairwise co-occurring vertices lies in a hyperedge."""
    edges = list(edges)
    adj = [0] * n
    for e in edges:
        for v in range(n):
            if e >> v & 1:
                adj[v] |= e & ~(1 << v)
    for s in range(1, 1 << n):
        verts = [v for v in range(n) if s >> v & 1]
        if all(adj[a] >> b & 1 for a, b in combinations(verts, 2)):
            if not any(s & ~e == 0 for e in edges):
                return False
    return True


def brute_sp(edges) -> bool:
    """SP property from its definition: every maximal Sperner subfamily has
    a private element for each of its members."""
    edges = sorted(set(edges))
    m = len(edges)
    fams = []
    for r in range(1, m + 1):
        for fam in combinations(range(m), r):
            if all(not (edges[a] & ~edges[b] == 0 or edges[b] & ~edges[a] == 0)
                   for a, b in combinations(fam, 2)):
                fams.append(frozenset(fam))
    maximal = [f for f in fams if not any(f < g for g in fams)]
    for fam in maximal:
        for f in fam:
            others = 0
            for g in fam:
                if g != f:
                    others |= edges[g]
            if edges[f] & ~others == 0:
                return False
    return True


def brute_two_well_dominated(G: Graph, K: int, I: int) -> bool:
    """Every minimal S inside I with K in N(S) has size exactly two."""
    dominating = [s for s in subsets(I) if s and K & ~G.neighborhood_of_set(s) == 0]
    ds = set(dominating)
    for s in dominating:
        minimal = not any((s & ~(1 << v)) in ds for v in range(G.n) if s >> v & 1)
        if minimal and bin(s).count("1") != 2:
            return False
    return True


def brute_isomorphic(G: Graph, H: Graph) -> bool:
    import networkx as nx

    a = nx.Graph()
    a.add_nodes_from(range(G.n))
    a.add_edges_from(G.edges())
    b = nx.Graph()
    b.add_nodes_from(range(H.n))
    b.add_edges_from(H.edges())
    return nx.is_isomorphic(a, b)
