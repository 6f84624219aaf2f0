"""Graph isomorphism for small graphs: colour refinement plus backtracking."""

from __future__ import annotations

from .bits import iter_bits
from .errors import BudgetExceeded
from .graph import Graph

ISO_MAX_VERTICES = 12


def _refine(graphs: list[Graph]) -> list[list[int]]:
    """Joint 1-dimensional Weisfeiler-Leman colouring of several graphs."""
    colors = [[g.degree(v) for v in range(g.n)] for g in graphs]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        sigs = []
        for g, cs in zip(graphs, colors):
            sigs.append([(cs[v], tuple(sorted(cs[w] for w in iter_bits(g.adj[v])))) for v in range(g.n)])
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def find_isomorphism(G: Graph, H: Graph, max_vertices: int = ISO_MAX_VERTICES) -> list[int] | None:
    """A bijection ``f`` with ``uv in E(G) <=> f(u)f(v) in E(H)``, or None.

    Raises :class:`BudgetExceeded` above ``max_vertices`` vertices.
    """
    if G.n != H.n or G.m != H.m:
        return None
    if G.n > max_vertices:
        raise BudgetExceeded("isomorphism", max_vertices,
                             f"isomorphism test capped at {max_vertices} vertices (got {G.n})")
    cg, ch = _refine([G, H])
    if sorted(cg) != sorted(ch):
        return None

    class_size: dict[int, int] = {}
    for c in cg:
        class_size[c] = class_size.get(c, 0) + 1
    # rare colours first, then stay close to already placed vertices
    order: list[int] = []
    placed = 0
    remaining = set(range(G.n))
    while remaining:
        v = min(remaining, key=lambda x: (-(G.adj[x] & placed).bit_count(), class_size[cg[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(ch):
        by_color.setdefault(c, []).append(y)

    mapping = [-1] * G.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == G.n:
            return True
        x = order[i]
        for y in by_color[cg[x]]:
            if used >> y & 1:
                continue
            ok = True
            for prev in order[:i]:
                if G.has_edge(x, prev) != H.has_edge(y, mapping[prev]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used |= 1 << y
            if extend(i + 1):
                return True
            used &= ~(1 << y)
            mapping[x] = -1
        return False

    return list(mapping) if extend(0) else None


def is_isomorphic(G: Graph, H: Graph, max_vertices: int = ISO_MAX_VERTICES) -> bool:
    return find_isomorphism(G, H, max_vertices) is not None


def is_isomorphism(G: Graph, H: Graph, f: list[int]) -> bool:
    """Check that ``f`` maps ``G`` onto ``H`` edge for edge."""
    if G.n != H.n or sorted(f) != list(range(G.n)):
        return False
    return G.relabel(f) == H
