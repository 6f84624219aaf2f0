"""Polynomial CDC recognition for triangle-free and split graphs, and a dispatcher.

Triangle-free graphs are split into connected components and each twin
class is contracted to one vertex; CDC-ness is preserved both ways since a
component is substituted into an edgeless graph and a twin class of size
``k`` is ``kK1`` substituted for one vertex.  In a connected triangle-free
graph every nontrivial module with an outside neighbour is a set of twins,
so nothing else needs decomposing.  A reduced component with at least two
vertices is CDC iff each vertex lies on exactly one bisimplicial edge
(these edges then form the unique bisimplicial perfect matching).

Split graphs are decided from a split partition ``(K, I)`` with ``I``
maximal: CDC iff the neighbourhood hypergraph ``(I, {N(v) & I : v in K})``
has the Sperner-private (SP) property and, when ``K`` is a maximal clique,
no 3-subset of ``I`` is a subtransversal of that hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .bits import bit, iter_bits, to_tuple
from .errors import NotInClassError
from .graph import (
    CdcVerdict,
    Graph,
    SplitPartition,
    components,
    is_cdc_bruteforce,
    is_p4_free,
    is_triangle_free,
    split_partition,
    substitute_graph,
    twins,
)
from .hypergraph import DEFAULT_LIMIT, Hypergraph, is_subtransversal

# ---------------------------------------------------------------------------
# bisimplicial edges
# ---------------------------------------------------------------------------


def is_bisimplicial_edge(G: Graph, u: int, v: int) -> bool:
    """Every vertex of ``N(u)`` is adjacent to every vertex of ``N(v)``."""
    if not G.has_edge(u, v):
        raise ValueError(f"{u}{v} is not an edge")
    nv = G.adj[v] & ~bit(u)
    for a in iter_bits(G.adj[u] & ~bit(v)):
        if nv & ~G.adj[a]:
            return False
    return True


def is_bisimplicial_edge_p4(G: Graph, u: int, v: int) -> bool:
    """Bisimpliciality as 'not the middle edge of an induced P4'.

    Agrees with :func:`is_bisimplicial_edge` on triangle-free graphs only.
    """
    if not G.has_edge(u, v):
        raise ValueError(f"{u}{v} is not an edge")
    ends_u = G.adj[u] & ~G.adj[v] & ~bit(v)
    ends_v = G.adj[v] & ~G.adj[u] & ~bit(u)
    return all(ends_v & ~G.adj[a] == 0 for a in iter_bits(ends_u))


def bisimplicial_edges(G: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in G.edges() if is_bisimplicial_edge(G, u, v)]


def bisimplicial_perfect_matching(G: Graph) -> list[tuple[int, int]] | None:
    """The bisimplicial perfect matching if every vertex has exactly one bisimplicial edge."""
    count = [0] * G.n
    edges = bisimplicial_edges(G)
    for u, v in edges:
        count[u] += 1
        count[v] += 1
    if all(c == 1 for c in count):
        return edges
    return None


# ---------------------------------------------------------------------------
# component / twin reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentReduction:
    """One connected component with its twin classes contracted.

    ``classes[i]`` lists the original vertices merged into vertex ``i`` of
    ``reduced``; the first member is the representative.
    """

    vertices: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    reduced: Graph

    @property
    def contractions(self) -> int:
        return sum(1 for c in self.classes if len(c) > 1)


@dataclass(frozen=True)
class ReductionTrace:
    n: int
    components: tuple[ComponentReduction, ...]

    @property
    def contractions(self) -> int:
        return sum(c.contractions for c in self.components)

    @property
    def trivial(self) -> bool:
        return len(self.components) == 1 and self.contractions == 0

    def replay(self) -> tuple[Graph, list[int]]:
        """Rebuild the graph by substitution.

        Each twin class of size ``k`` is re-expanded by substituting ``kK1``
        and the components are substituted into an edgeless graph.  Returns
        the graph and, for each of its vertices, the original vertex id; so
        ``g.relabel(labels) == original``.
        """
        parts = []
        for comp in self.components:
            g = comp.reduced
            labels: list = [("class", i) for i in range(g.n)]
            for i, cls in enumerate(comp.classes):
                slot = labels.index(("class", i))
                if len(cls) == 1:
                    labels[slot] = cls[0]
                    continue
                g, g_map = substitute_graph(g, slot, Graph.edgeless(len(cls)))
                new = list(cls) + [None] * (g.n - len(cls))
                for old, nw in g_map.items():
                    new[nw] = labels[old]
                labels = new
            parts.append((g, labels))
        g = Graph.edgeless(len(parts))
        labels = [("part", j) for j in range(len(parts))]
        for j, (part, part_labels) in enumerate(parts):
            slot = labels.index(("part", j))
            g, g_map = substitute_graph(g, slot, part)
            new = list(part_labels) + [None] * (g.n - part.n)
            for old, nw in g_map.items():
                new[nw] = labels[old]
            labels = new
        return g, labels


def justify_reduction(G: Graph) -> ReductionTrace:
    """Split ``G`` into components and contract every twin class in each."""
    comps = []
    for verts in components(G):
        sub, ids = G.induced(verts)
        classes = tuple(tuple(ids[i] for i in cls) for cls in twins(sub))
        rep_pos = {}
        for k, cls in enumerate(classes):
            for v in cls:
                rep_pos[v] = k
        edges = set()
        for cls_idx, cls in enumerate(classes):
            for w in iter_bits(G.adj[cls[0]]):
                a, b = sorted((cls_idx, rep_pos[w]))
                edges.add((a, b))
        reduced = Graph.from_edges(len(classes), sorted(edges))
        comps.append(ComponentReduction(tuple(verts), classes, reduced))
    return ReductionTrace(G.n, tuple(comps))


@dataclass(frozen=True)
class TriangleFreeCertificate:
    """Per-component bisimplicial matchings on twin-class representatives.

    ``matchings[i]`` is None for the first component that failed (and the
    scan stops there); an empty list stands for a one-vertex component.
    """

    trace: ReductionTrace
    matchings: tuple[tuple[tuple[int, int], ...] | None, ...]
    failed_component: int | None = None


def recognize_triangle_free_cdc(G: Graph, witness: bool = False, limit: int = DEFAULT_LIMIT) -> CdcVerdict:
    """CDC test for triangle-free graphs.

    Returns a verdict whose certificate is a :class:`TriangleFreeCertificate`.
    With ``witness=True`` a failing verdict also carries an offending clique
    of ``G^c``, found by the brute-force route.
    """
    if not is_triangle_free(G):
        raise NotInClassError("graph has a triangle")
    trace = justify_reduction(G)
    matchings: list = []
    failed = None
    for idx, comp in enumerate(trace.components):
        r = comp.reduced
        if r.n == 1:
            matchings.append(())
            continue
        pm = bisimplicial_perfect_matching(r)
        if pm is None:
            matchings.append(None)
            failed = idx
            break
        reps = [cls[0] for cls in comp.classes]
        matchings.append(tuple((reps[a], reps[b]) for a, b in pm))
    cert = TriangleFreeCertificate(trace, tuple(matchings), failed)
    if failed is None:
        return CdcVerdict(True, "triangle_free", certificate=cert)
    w = is_cdc_bruteforce(G, limit).witness if witness else None
    return CdcVerdict(False, "triangle_free", witness=w, certificate=cert)


# ---------------------------------------------------------------------------
# split graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodHypergraph:
    """``(I, {N(v) & I : v in K})`` relabelled so that ``I`` is ``0..|I|-1``.

    ``owners`` maps each ``K`` vertex to its hyperedge (in relabelled
    coordinates); equal neighbourhoods share one hyperedge.
    """

    hypergraph: Hypergraph | None
    i_vertices: tuple[int, ...]
    owners: dict[int, int] = field(compare=False)


def neighborhood_hypergraph(G: Graph, P: SplitPartition) -> NeighborhoodHypergraph:
    i_vertices = to_tuple(P.I)
    pos = {v: i for i, v in enumerate(i_vertices)}
    owners = {}
    for v in iter_bits(P.K):
        e = 0
        for w in iter_bits(G.adj[v] & P.I):
            e |= 1 << pos[w]
        owners[v] = e
    edges = tuple(set(owners.values()))
    hyp = None
    if edges and i_vertices:
        hyp = Hypergraph(len(i_vertices), edges, allow_uncovered=True)
    return NeighborhoodHypergraph(hyp, i_vertices, owners)


def sp_property(H: Hypergraph | None) -> bool:
    """Sperner-private property.

    Fails exactly when some hyperedge is covered by the union of the
    hyperedges incomparable with it.
    """
    if H is None:
        return True
    edges = H.edges
    for e in edges:
        union = 0
        for f in edges:
            if e & ~f and f & ~e:
                union |= f
        if e & ~union == 0:
            return False
    return True


def is_two_well_dominated(G: Graph, P: SplitPartition) -> bool:
    """Every minimal ``S`` within ``I`` dominating ``K`` has exactly two vertices.

    Needs ``I`` maximal and ``K`` a maximal clique; then no dominating set
    has size below two, so it suffices that no 3-subset of ``I`` is a
    subtransversal of the neighbourhood hypergraph.
    """
    if not (P.i_maximal and P.k_maximal):
        raise ValueError("2-well-domination is only tested when I is maximal and K is a maximal clique")
    nh = neighborhood_hypergraph(G, P)
    H = nh.hypergraph
    if H is None:
        return True
    for trio in combinations(range(H.n), 3):
        if is_subtransversal(H, trio):
            return False
    return True


def split_mct_conditions(G: Graph, P: SplitPartition, x: int) -> bool:
    """Minimal-clique-transversal test for split graphs via the three
    partition conditions (nonempty ``K'`` when ``K`` is maximal,
    ``I' = I - N(K')``, private ``I``-neighbours for ``K'``)."""
    kx = x & P.K
    ix = x & P.I
    if P.k_maximal and not kx:
        return False
    if ix != P.I & ~G.neighborhood_of_set(kx):
        return False
    for v in iter_bits(kx):
        if not any(G.adj[w] & kx == bit(v) for w in iter_bits(G.adj[v] & P.I)):
            return False
    return True


def split_clique_dual(G: Graph, P: SplitPartition) -> Graph:
    """``G^c`` of a split graph from the four adjacency rules on ``(K, I)``."""
    if not P.i_maximal:
        raise ValueError("rules need I to be a maximal independent set")
    adj = [0] * G.n
    kset = P.K
    for u in range(G.n):
        for v in range(u + 1, G.n):
            uk, vk = bool(kset >> u & 1), bool(kset >> v & 1)
            if uk and vk:
                nu, nv = G.adj[u] & P.I, G.adj[v] & P.I
                edge = bool(nu & ~nv) and bool(nv & ~nu)
            elif uk != vk:
                edge = not G.has_edge(u, v)
            elif P.k_maximal:
                edge = bool(kset & ~G.adj[u] & ~G.adj[v])
            else:
                edge = True
            if edge:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


@dataclass(frozen=True)
class SplitCertificate:
    partition: SplitPartition
    sp_property: bool
    two_well_dominated: bool | None


def recognize_split_cdc(G: Graph, witness: bool = False, limit: int = DEFAULT_LIMIT) -> CdcVerdict:
    """CDC test for split graphs (SP property plus 2-well-domination)."""
    P = split_partition(G)
    if P is None:
        raise NotInClassError("graph is not split")
    nh = neighborhood_hypergraph(G, P)
    sp = sp_property(nh.hypergraph)
    twd = None
    ok = sp
    if sp and P.k_maximal:
        twd = is_two_well_dominated(G, P)
        ok = twd
    cert = SplitCertificate(P, sp, twd)
    if ok:
        return CdcVerdict(True, "split", certificate=cert)
    w = is_cdc_bruteforce(G, limit).witness if witness else None
    return CdcVerdict(False, "split", witness=w, certificate=cert)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------


def is_cdc(G: Graph, witness: bool = False, limit: int = DEFAULT_LIMIT) -> CdcVerdict:
    """Decide CDC with the cheapest applicable method.

    P4-free graphs are always CDC; then the triangle-free and split
    recognizers; everything else goes through brute-force dualization.
    """
    if is_p4_free(G):
        return CdcVerdict(True, "p4free")
    if is_triangle_free(G):
        return recognize_triangle_free_cdc(G, witness, limit)
    if split_partition(G) is not None:
        return recognize_split_cdc(G, witness, limit)
    return is_cdc_bruteforce(G, limit)
