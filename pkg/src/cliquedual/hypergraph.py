"""Hypergraphs over ``0..n-1`` and their basic transformations.

A :class:`Hypergraph` keeps its hyperedges as bitmasks in canonical order
(each hyperedge read as its sorted vertex tuple, the list sorted
lexicographically, duplicates removed), so equality of two hypergraphs is
plain tuple equality.

The transformations here are

* :func:`is_sperner` and :func:`is_conformal`,
* :func:`dualize` (all minimal transversals, i.e. the blocker),
* :func:`conformalize` (clique hypergraph of the co-occurrence graph),
* :func:`antiblocker`,
* :func:`is_subtransversal`, and
* :func:`substitute_hypergraph`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator

import numpy as np

from . import kernels
from .bits import MAX_VERTICES, as_mask, bit, full_mask, iter_bits, lex_key, popcount, to_tuple
from .errors import BudgetExceeded

if TYPE_CHECKING:
    from .graph import Graph

DEFAULT_LIMIT = 1_000_000


@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph on vertices ``0..n-1``.

    ``edges`` may be given as bitmasks or as iterables of vertex ids; it is
    stored as a canonical tuple of bitmasks.  Empty hyperedges are rejected.
    Every vertex must lie in some hyperedge unless ``allow_uncovered`` is set.
    """

    n: int
    edges: tuple[int, ...]
    allow_uncovered: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"hypergraph needs at least one vertex, got n={n!r}")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        masks = set()
        universe = full_mask(n)
        for e in self.edges:
            m = as_mask(e)
            if m == 0:
                raise ValueError("empty hyperedge")
            if m & ~universe:
                raise ValueError(f"hyperedge {to_tuple(m)} has a vertex outside 0..{n - 1}")
            masks.add(m)
        canon = tuple(sorted(masks, key=lex_key))
        object.__setattr__(self, "edges", canon)
        if not self.allow_uncovered:
            covered = 0
            for m in canon:
                covered |= m
            if covered != universe:
                missing = to_tuple(universe & ~covered)
                raise ValueError(f"vertices {missing} lie in no hyperedge")

    # -- views -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __contains__(self, s: object) -> bool:
        if isinstance(s, int):
            return s in self._edge_set
        return as_mask(s) in self._edge_set  # type: ignore[arg-type]

    @property
    def _edge_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_cache_edge_set")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_cache_edge_set", cached)
        return cached

    def edge_sets(self) -> list[tuple[int, ...]]:
        """Hyperedges as sorted vertex tuples, in canonical order."""
        return [to_tuple(e) for e in self.edges]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def dim(self) -> int:
        return max((popcount(e) for e in self.edges), default=0)

    def degree(self, v: int) -> int:
        b = bit(v)
        return sum(1 for e in self.edges if e & b)

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def private_edges(self, s: int | Iterable[int], v: int) -> list[int]:
        """Hyperedges meeting ``s`` exactly in ``{v}``."""
        s = as_mask(s)
        b = bit(v)
        return [e for e in self.edges if e & s == b]

    def words(self) -> np.ndarray:
        return kernels.as_words(self.edges)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, t)) + "}" for t in self.edge_sets())
        return f"Hypergraph(n={self.n}, [{body}])"


def _relaxed(n: int, edges: Iterable[int]) -> Hypergraph:
    return Hypergraph(n, tuple(edges), allow_uncovered=True)


def _covers(H: Hypergraph) -> bool:
    covered = 0
    for e in H.edges:
        covered |= e
    return covered == full_mask(H.n)


def is_sperner(H: Hypergraph) -> bool:
    """No hyperedge is contained in a different one."""
    return not kernels.any_contained(H.edges)


def is_conformal_gilmore(H: Hypergraph) -> bool:
    """Gilmore's triple test, run directly on the hyperedges."""
    return kernels.gilmore_conformal(H.edges)


def is_conformal(H: Hypergraph) -> bool:
    """Every set of pairwise co-occurring vertices lies in a hyperedge.

    Sperner inputs that cover their vertex set go through the cheaper
    comparison with :func:`conformalize`; everything else runs the triple test.
    """
    if _covers(H) and is_sperner(H):
        return conformalize(H) == H
    return is_conformal_gilmore(H)


def co_occurrence_graph(H: Hypergraph) -> Graph:
    from .graph import Graph

    adj = [0] * H.n
    for e in H.edges:
        for v in iter_bits(e):
            adj[v] |= e
    return Graph(H.n, tuple(a & ~bit(v) for v, a in enumerate(adj)))


def conformalize(H: Hypergraph) -> Hypergraph:
    """Clique hypergraph of the co-occurrence graph of ``H``."""
    from .graph import clique_hypergraph

    return clique_hypergraph(co_occurrence_graph(H))


def antiblocker(H: Hypergraph) -> Hypergraph:
    """Maximal vertex sets meeting every hyperedge at most once.

    Such sets are exactly the maximal independent sets of the
    co-occurrence graph.
    """
    from .graph import maximal_cliques

    comp = co_occurrence_graph(H).complement()
    return Hypergraph(H.n, tuple(maximal_cliques(comp)))


def dualize(H: Hypergraph, limit: int = DEFAULT_LIMIT) -> Hypergraph:
    """All inclusion-minimal transversals of ``H``.

    Sequential construction: hyperedges are processed smallest first, and
    partial transversals that miss the current hyperedge are extended by each
    of its vertices and then pruned back to the minimal ones.  Raises
    :class:`BudgetExceeded` when the intermediate or final family outgrows
    ``limit``.

    For non-Sperner input some vertices may lie in no minimal transversal;
    the result is then returned with ``allow_uncovered`` set.
    """
    if not H.edges:
        raise ValueError("the empty hypergraph has only the empty transversal")
    order = sorted(H.edges, key=lambda e: (popcount(e), lex_key(e)))
    first = order[0]
    trans = np.array([bit(v) for v in iter_bits(first)], dtype=np.int64)
    for e in order[1:]:
        hitting = (trans & e) != 0
        if hitting.all():
            continue
        hit = trans[hitting]
        miss = trans[~hitting]
        ebits = np.array([bit(v) for v in iter_bits(e)], dtype=np.int64)
        cands = np.unique((miss[:, None] | ebits[None, :]).ravel())
        if cands.size + hit.size > limit:
            raise BudgetExceeded("dualize", limit)
        keep = kernels.filter_candidates(cands, hit)
        trans = np.concatenate([hit, cands[keep]])
    if trans.size > limit:
        raise BudgetExceeded("dualize", limit)
    edges = tuple(int(t) for t in trans)
    covered = 0
    for t in edges:
        covered |= t
    return Hypergraph(H.n, edges, allow_uncovered=covered != full_mask(H.n))


def is_subtransversal(H: Hypergraph, s: int | Iterable[int]) -> bool:
    """Whether ``s`` is contained in some minimal transversal of ``H``.

    Searches for one hyperedge ``e_v`` per ``v`` in ``s`` with
    ``e_v & s == {v}`` such that the union of the chosen hyperedges, minus
    ``s``, contains no hyperedge.  Vertices with fewer candidate hyperedges
    are branched on first, and a branch is cut as soon as its union swallows
    a hyperedge disjoint from ``s``.
    """
    s = as_mask(s)
    if s == 0:
        raise ValueError("subtransversal test needs a nonempty set")
    if s & ~full_mask(H.n):
        raise ValueError("set has vertices outside the hypergraph")
    choices = []
    for v in iter_bits(s):
        ev = H.private_edges(s, v)
        if not ev:
            return False
        choices.append(ev)
    choices.sort(key=len)
    disjoint = [e for e in H.edges if e & s == 0]

    def blocked(union: int) -> bool:
        return any(e & ~union == 0 for e in disjoint)

    def search(i: int, union: int) -> bool:
        if i == len(choices):
            return True
        for e in choices[i]:
            u = union | e
            if not blocked(u):
                if search(i + 1, u):
                    return True
        return False

    return search(0, 0)


def substitute_hypergraph(G: Hypergraph, v: int, F: Hypergraph) -> tuple[Hypergraph, dict[int, int]]:
    """Substitute ``F`` for vertex ``v`` of ``G``.

    The result has ``F``'s vertices first (unchanged ids ``0..F.n-1``),
    followed by ``G``'s vertices other than ``v`` in increasing order.
    Returns the hypergraph and the map from old ``G`` ids to new ids.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    g_map: dict[int, int] = {}
    nxt = F.n
    for w in range(G.n):
        if w != v:
            g_map[w] = nxt
            nxt += 1

    def move(mask: int) -> int:
        out = 0
        for w in iter_bits(mask):
            out |= bit(g_map[w])
        return out

    vb = bit(v)
    edges = []
    for g in G.edges:
        if g & vb:
            rest = move(g & ~vb)
            edges.extend(f | rest for f in F.edges)
        else:
            edges.append(move(g))
    assembled = _relaxed(nxt, edges)
    result = Hypergraph(assembled.n, assembled.edges,
                        allow_uncovered=G.allow_uncovered or F.allow_uncovered)
    return result, g_map
