"""Small-graph enumeration, labeled or up to isomorphism.

Isomorphism classes are built by vertex augmentation: every class on
``n`` vertices arises from a class on ``n-1`` vertices plus one vertex with
some neighbourhood.  Candidates are deduplicated by a canonical code, the
minimum upper-triangle adjacency code over all vertex orderings that list
colour-refinement classes in a fixed order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

import numpy as np

from . import kernels
from .graph import Graph
from .isomorphism import _refine

DEDUP_MAX_VERTICES = 8
LABELED_MAX_VERTICES = 7


def _orderings(colors: list[int]) -> np.ndarray:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    blocks = [list(permutations(classes[c])) for c in sorted(classes)]
    rows = [sum(choice, ()) for choice in product(*blocks)]
    return np.array(rows, dtype=np.int64)


def canonical_code(G: Graph) -> tuple[int, int]:
    """An isomorphism invariant that separates non-isomorphic graphs."""
    if G.n < 2:
        return (G.n, 0)
    (colors,) = _refine([G])
    return (G.n, kernels.canonical_code(G.adj, _orderings(colors)))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs on ``0..n-1``."""
    if not 1 <= n <= LABELED_MAX_VERTICES:
        raise ValueError(f"labeled enumeration supports 1..{LABELED_MAX_VERTICES} vertices")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def _extend(G: Graph) -> Iterator[Graph]:
    n = G.n
    for nb in range(1 << n):
        adj = list(G.adj)
        for v in range(n):
            if nb >> v & 1:
                adj[v] |= 1 << n
        adj.append(nb)
        yield Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.edgeless(1),)
    seen: dict[tuple[int, int], Graph] = {}
    for g in _classes(n - 1):
        for h in _extend(g):
            seen.setdefault(canonical_code(h), h)
    return tuple(seen[k] for k in sorted(seen))


def unlabeled_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class, ordered by canonical code.

    Results are memoized per ``n`` (the graphs are immutable).
    """
    if not 1 <= n <= DEDUP_MAX_VERTICES:
        raise ValueError(f"isomorphism-free enumeration supports 1..{DEDUP_MAX_VERTICES} vertices")
    return list(_classes(n))


def enumerate_graphs(n: int, dedup: bool = True) -> Iterator[Graph]:
    if dedup:
        yield from unlabeled_graphs(n)
    else:
        yield from labeled_graphs(n)


def graphs_up_to(n: int) -> Iterator[Graph]:
    """Non-isomorphic graphs on ``1..n`` vertices."""
    for k in range(1, n + 1):
        yield from unlabeled_graphs(k)
