"""Simple undirected graphs with bitmask adjacency, and the clique machinery.

Vertices are ``0..n-1`` and ``adj[u]`` is the bitmask of ``N(u)``.  The
central objects are the clique hypergraph ``C(G)`` (all maximal cliques),
its dual ``C^d(G)`` (all minimal clique transversals) and the clique-dual
graph ``G^c``, the co-occurrence graph of ``C^d(G)``.

Isolated vertices count as singleton maximal cliques, so an isolated vertex
belongs to every clique transversal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .bits import MAX_VERTICES, as_mask, full_mask, iter_bits, lex_key, lowest, popcount, to_tuple
from .errors import BudgetExceeded
from .hypergraph import DEFAULT_LIMIT, Hypergraph, co_occurrence_graph, dualize, is_subtransversal

CLIQUE_LIMIT = 1 << 20


@dataclass(frozen=True)
class Graph:
    """Simple graph on ``0..n-1``; ``adj[u]`` is the neighbourhood bitmask of ``u``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n!r}")
        if n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        adj = tuple(int(a) for a in self.adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        universe = full_mask(n)
        for u, a in enumerate(adj):
            if a & ~universe:
                raise ValueError(f"row {u} has neighbours outside 0..{n - 1}")
            if a >> u & 1:
                raise ValueError(f"self-loop at {u}")
            for v in iter_bits(a):
                if not adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = full_mask(n)
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    # -- views -----------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def complement(self) -> Graph:
        full = full_mask(self.n)
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def neighborhood_of_set(self, s: int) -> int:
        """``N(S)``: vertices outside ``s`` with a neighbour in ``s``."""
        out = 0
        for v in iter_bits(s):
            out |= self.adj[v]
        return out & ~s

    def induced(self, vertices: int | Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled to ``0..k-1`` in increasing order.

        Returns the subgraph and the list of original ids by new id.
        """
        keep = to_tuple(as_mask(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in iter_bits(self.adj[v]):
                if w in pos:
                    row |= 1 << pos[w]
            adj.append(row)
        return Graph(len(keep), tuple(adj)), list(keep)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for u in range(self.n):
            row = 0
            for w in iter_bits(self.adj[u]):
                row |= 1 << perm[w]
            adj[perm[u]] = row
        return Graph(self.n, tuple(adj))

    def is_clique(self, s: int | Iterable[int]) -> bool:
        s = as_mask(s)
        return all(s & ~self.adj[v] == 1 << v for v in iter_bits(s))

    def is_independent(self, s: int | Iterable[int]) -> bool:
        s = as_mask(s)
        return all(s & self.adj[v] == 0 for v in iter_bits(s))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(G: Graph) -> Graph:
    return G.complement()


# ---------------------------------------------------------------------------
# cliques and transversals
# ---------------------------------------------------------------------------


def maximal_cliques(G: Graph, limit: int = CLIQUE_LIMIT) -> list[int]:
    """All maximal cliques as bitmasks, in canonical (lexicographic) order.

    Bron-Kerbosch with Tomita pivoting on bitsets.
    """
    adj = G.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
                if len(out) > limit:
                    raise BudgetExceeded("maximal_cliques", limit)
            return
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            c = popcount(p & adj[u])
            if c > best:
                pivot, best = u, c
        for v in iter_bits(p & ~adj[pivot]):
            b = 1 << v
            expand(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    expand(0, G.vertex_mask, 0)
    out.sort(key=lex_key)
    return out


def clique_hypergraph(G: Graph, limit: int = CLIQUE_LIMIT) -> Hypergraph:
    return Hypergraph(G.n, tuple(maximal_cliques(G, limit)))


def is_maximal_clique(G: Graph, s: int | Iterable[int]) -> bool:
    s = as_mask(s)
    if s == 0 or not G.is_clique(s):
        return False
    common = G.vertex_mask & ~s
    for v in iter_bits(s):
        common &= G.adj[v]
    return common == 0


def minimal_clique_transversals(G: Graph, limit: int = DEFAULT_LIMIT) -> Hypergraph:
    """``C^d(G)``: the minimal vertex sets meeting every maximal clique."""
    return dualize(clique_hypergraph(G), limit)


def is_clique_transversal(G: Graph, x: int | Iterable[int], cliques: list[int] | None = None) -> bool:
    x = as_mask(x)
    cliques = maximal_cliques(G) if cliques is None else cliques
    return all(c & x for c in cliques)


def is_minimal_clique_transversal(G: Graph, x: int | Iterable[int]) -> bool:
    """Meets every maximal clique, and each member has a private maximal clique."""
    x = as_mask(x)
    cliques = maximal_cliques(G)
    if not x or not is_clique_transversal(G, x, cliques):
        return False
    return all(any(c & x == 1 << v for c in cliques) for v in iter_bits(x))


def clique_dual(G: Graph, mode: str = "full", limit: int = DEFAULT_LIMIT) -> Graph:
    """The clique-dual ``G^c``.

    ``full`` enumerates ``C^d(G)`` and takes its co-occurrence graph.
    ``pairwise`` decides each pair ``{u, v}`` with the subtransversal test on
    ``C(G)`` and never builds the dual, which matters when it is huge.
    """
    if mode == "full":
        return co_occurrence_graph(minimal_clique_transversals(G, limit))
    if mode == "pairwise":
        H = clique_hypergraph(G)
        adj = [0] * G.n
        for u in range(G.n):
            for v in range(u + 1, G.n):
                if is_subtransversal(H, (1 << u) | (1 << v)):
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        return Graph(G.n, tuple(adj))
    raise ValueError(f"unknown clique-dual mode {mode!r}")


@dataclass(frozen=True)
class CdcVerdict:
    """Answer of a CDC test.

    ``witness`` (when the answer is no) is a maximal clique of ``G^c`` that
    is not a minimal clique transversal of ``G``.  ``certificate`` carries
    method-specific evidence, e.g. the bisimplicial matchings found by the
    triangle-free recognizer.
    """

    is_cdc: bool
    method: str
    witness: int | None = None
    certificate: Any = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.is_cdc

    def witness_set(self) -> list[int] | None:
        return None if self.witness is None else list(iter_bits(self.witness))


def is_cdc_bruteforce(G: Graph, limit: int = DEFAULT_LIMIT) -> CdcVerdict:
    """Decide CDC by comparing the maximal cliques of ``G^c`` with ``C^d(G)``."""
    dual = minimal_clique_transversals(G, limit)
    gc = co_occurrence_graph(dual)
    offending = [c for c in maximal_cliques(gc) if c not in dual]
    if not offending:
        return CdcVerdict(True, "bruteforce")
    return CdcVerdict(False, "bruteforce", witness=min(offending, key=lex_key))


def verify_witness(G: Graph, witness: int) -> bool:
    """Independent check of a non-CDC witness."""
    gc = clique_dual(G, "pairwise")
    return is_maximal_clique(gc, witness) and not is_minimal_clique_transversal(G, witness)


def are_clique_duals(G1: Graph, G2: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    if G1.n != G2.n:
        return False
    return clique_dual(G1, limit=limit) == G2 and clique_dual(G2, limit=limit) == G1


def clique_duals_by_cover(G1: Graph, G2: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    """Edge-clique-cover criterion: each graph's minimal clique transversals
    are cliques of the other graph covering all of its edges."""
    if G1.n != G2.n:
        return False

    def covers(a: Graph, b: Graph) -> bool:
        trans = minimal_clique_transversals(a, limit)
        if not all(b.is_clique(t) for t in trans):
            return False
        return all(any(t >> u & 1 and t >> v & 1 for t in trans) for u, v in b.edges())

    return covers(G1, G2) and covers(G2, G1)


# ---------------------------------------------------------------------------
# substitution
# ---------------------------------------------------------------------------


def substitute_graph(G: Graph, v: int, F: Graph) -> tuple[Graph, dict[int, int]]:
    """``G_v[F]``: replace ``v`` by ``F`` and join ``F`` to ``N_G(v)``.

    Indexing matches :func:`~cliquedual.hypergraph.substitute_hypergraph`:
    ``F`` keeps ids ``0..F.n-1``; the other vertices of ``G`` follow in order.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    g_map = {}
    nxt = F.n
    for w in range(G.n):
        if w != v:
            g_map[w] = nxt
            nxt += 1
    edges = list(F.edges())
    for a, b in G.edges():
        if a != v and b != v:
            edges.append((g_map[a], g_map[b]))
    for w in iter_bits(G.adj[v]):
        for f in range(F.n):
            edges.append((f, g_map[w]))
    return Graph.from_edges(nxt, edges), g_map


def disjoint_union(graphs: list[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, w + offset) for u, w in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def is_triangle_free(G: Graph) -> bool:
    for u, v in G.edges():
        if G.adj[u] & G.adj[v]:
            return False
    return True


def induced_p4(G: Graph) -> tuple[int, int, int, int] | None:
    """Some induced path ``a-b-c-d``, or None."""
    adj = G.adj
    for b, c in G.edges():
        for mid_b, mid_c in ((b, c), (c, b)):
            ends_a = adj[mid_b] & ~adj[mid_c] & ~(1 << mid_c)
            ends_d = adj[mid_c] & ~adj[mid_b] & ~(1 << mid_b)
            for a in iter_bits(ends_a):
                far = ends_d & ~adj[a]
                if far:
                    return (a, mid_b, mid_c, lowest(far))
    return None


def is_p4_free(G: Graph) -> bool:
    return induced_p4(G) is None


def twins(G: Graph) -> list[tuple[int, ...]]:
    """Classes of vertices with equal open neighbourhoods, ordered by least member."""
    groups: dict[int, int] = {}
    for v, a in enumerate(G.adj):
        groups[a] = groups.get(a, 0) | (1 << v)
    return sorted((to_tuple(m) for m in groups.values()), key=lambda t: t[0])


def is_twin_free(G: Graph) -> bool:
    return len(set(G.adj)) == G.n


def isolated_vertices(G: Graph) -> list[int]:
    return [v for v, a in enumerate(G.adj) if a == 0]


def components(G: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least member."""
    left = G.vertex_mask
    out = []
    while left:
        comp = frontier = left & -left
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= G.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        out.append(to_tuple(comp))
        left &= ~comp
    return out


def iter_induced_subsets(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``0..n-1`` as masks (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        c = s & -s
        r = s + c
        s = (((r ^ s) >> 2) // c) | r


# ---------------------------------------------------------------------------
# split graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    """Clique ``K`` and independent set ``I`` partitioning the vertices."""

    K: int
    I: int
    i_maximal: bool
    k_maximal: bool

    def k_list(self) -> list[int]:
        return list(iter_bits(self.K))

    def i_list(self) -> list[int]:
        return list(iter_bits(self.I))


def split_partition(G: Graph) -> SplitPartition | None:
    """A split partition with ``I`` a maximal independent set, or None.

    Degree-sequence test: with degrees sorted decreasingly and ``m`` the
    largest index with ``d_m >= m - 1``, ``G`` is split iff
    ``sum(d_1..d_m) == m(m-1) + sum(d_{m+1}..d_n)``; the top ``m`` vertices
    then form a clique.  Afterwards a clique vertex without neighbours in
    ``I`` (there is at most one) is moved to ``I``.
    """
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    deg = [G.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    K = 0
    for v in order[:m]:
        K |= 1 << v
    I = G.vertex_mask & ~K
    if not (G.is_clique(K) and G.is_independent(I)):
        raise AssertionError("degree test accepted a non-split partition")
    for v in iter_bits(K):
        if G.adj[v] & I == 0:
            K &= ~(1 << v)
            I |= 1 << v
            break
    i_maximal = all(G.adj[v] & I for v in iter_bits(K))
    common = I
    for v in iter_bits(K):
        common &= G.adj[v]
    k_maximal = K != 0 and common == 0
    return SplitPartition(K, I, i_maximal, k_maximal)


def is_split(G: Graph) -> bool:
    return split_partition(G) is not None
