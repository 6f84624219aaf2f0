"""Exact graph invariants used as diagnostics for triangle-free CDC graphs.

The exponential ones (independence number, clique cover number, strong
cliques, localizability) enumerate maximal independent sets or clique
partitions and are meant for graphs of a couple of dozen vertices.
"""

from __future__ import annotations

from functools import lru_cache

from .bits import iter_bits, popcount
from .errors import BudgetExceeded
from .graph import CLIQUE_LIMIT, Graph, maximal_cliques

EXACT_MAX_VERTICES = 40


def _check_size(G: Graph, stage: str) -> None:
    if G.n > EXACT_MAX_VERTICES:
        raise BudgetExceeded(stage, EXACT_MAX_VERTICES,
                             f"{stage}: exact search capped at {EXACT_MAX_VERTICES} vertices")


def maximal_independent_sets(G: Graph, limit: int = CLIQUE_LIMIT) -> list[int]:
    return maximal_cliques(G.complement(), limit)


def independence_number(G: Graph) -> int:
    _check_size(G, "independence_number")
    return max(popcount(s) for s in maximal_independent_sets(G))


def vertex_cover_number(G: Graph) -> int:
    return G.n - independence_number(G)


def matching_number(G: Graph) -> int:
    """Maximum matching size (Edmonds' blossom algorithm via networkx)."""
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return len(nx.max_weight_matching(g, maxcardinality=True))


def clique_cover_number(G: Graph) -> int:
    """Fewest cliques whose union is the vertex set."""
    _check_size(G, "clique_cover_number")

    @lru_cache(maxsize=None)
    def cover(left: int) -> int:
        if not left:
            return 0
        v = (left & -left).bit_length() - 1
        sub, ids = G.induced(left)
        best = G.n
        pos = ids.index(v)
        for c in maximal_cliques(sub):
            if not c >> pos & 1:
                continue
            taken = 0
            for i in iter_bits(c):
                taken |= 1 << ids[i]
            best = min(best, 1 + cover(left & ~taken))
        return best

    return cover(G.vertex_mask)


def is_konig_egervary(G: Graph) -> bool:
    return vertex_cover_number(G) == matching_number(G)


def is_semi_perfect(G: Graph) -> bool:
    return clique_cover_number(G) == independence_number(G)


def is_well_covered(G: Graph) -> bool:
    """All maximal independent sets have the same size."""
    _check_size(G, "is_well_covered")
    return len({popcount(s) for s in maximal_independent_sets(G)}) == 1


def is_strong_clique(G: Graph, clique: int, mis: list[int] | None = None) -> bool:
    """A clique meeting every maximal independent set."""
    if not clique or not G.is_clique(clique):
        return False
    mis = maximal_independent_sets(G) if mis is None else mis
    return all(s & clique for s in mis)


def strong_cliques(G: Graph) -> list[int]:
    mis = maximal_independent_sets(G)
    seen: set[int] = set()
    for c in maximal_cliques(G):
        members = list(iter_bits(c))
        for k in range(1, 1 << len(members)):
            sub = 0
            for i, v in enumerate(members):
                if k >> i & 1:
                    sub |= 1 << v
            seen.add(sub)
    return sorted(c for c in seen if all(s & c for s in mis))


def localizable_partition(G: Graph) -> list[int] | None:
    """A partition of the vertices into strong cliques, or None."""
    _check_size(G, "is_localizable")
    strong = strong_cliques(G)
    by_low: dict[int, list[int]] = {}
    for c in strong:
        for v in iter_bits(c):
            by_low.setdefault(v, []).append(c)

    def search(left: int, parts: list[int]) -> list[int] | None:
        if not left:
            return parts
        v = (left & -left).bit_length() - 1
        for c in by_low.get(v, ()):
            if c & ~left == 0:
                found = search(left & ~c, parts + [c])
                if found is not None:
                    return found
        return None

    return search(G.vertex_mask, [])


def is_localizable(G: Graph) -> bool:
    return localizable_partition(G) is not None
