"""Generators for the named graph families.

Vertex layouts (0-based):

* ``comb(n)`` / ``anticomb(n)``: ``u_1..u_n`` are ``0..n-1``, ``v_1..v_n`` are
  ``n..2n-1``.  ``{u_i}`` is a clique; in the comb ``v_i ~ u_i``, in the
  anticomb ``v_i ~ u_j`` for every ``j != i``.
* ``settled_comb(n)`` / ``settled_anticomb(n)``: an extra ``u_0`` joined to
  every ``u_i`` only; ``u_0..u_n`` are ``0..n``, ``v_1..v_n`` are ``n+1..2n``.
* ``cobip_matching(n)``: cliques ``C = {u_0..u_n}`` (``0..n``) and
  ``D = {v_0..v_n}`` (``n+1..2n+1``), plus ``u_i ~ v_i`` for ``i >= 1``.
* ``subdiv_star(n)``: same layout, edges ``u_0v_0``, ``u_0u_i``, ``u_iv_i``.
* ``band(n)``: ``v_1..v_2n`` are ``0..2n-1``, adjacent iff ``|i-j| < n``.
* ``corona(H)``: ``H``'s vertices first, then pendant ``H.n + i`` on vertex ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, substitute_graph

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "edgeless",
    "comb",
    "anticomb",
    "settled_comb",
    "settled_anticomb",
    "cobip_matching",
    "subdiv_star",
    "band",
    "corona",
)

_MIN_N = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "edgeless": 1,
    "comb": 1,
    "anticomb": 1,
    "settled_comb": 1,
    "settled_anticomb": 1,
    "cobip_matching": 1,
    "subdiv_star": 1,
    "band": 2,
}


def _need(name: str, n: int) -> None:
    lo = _MIN_N[name]
    if not isinstance(n, int) or n < lo:
        raise ValueError(f"{name} needs n >= {lo}, got {n!r}")


def path(n: int) -> Graph:
    _need("path", n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need("cycle", n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need("complete", n)
    return Graph.complete(n)


def edgeless(n: int) -> Graph:
    _need("edgeless", n)
    return Graph.edgeless(n)


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]]


def comb(n: int) -> Graph:
    _need("comb", n)
    u = list(range(n))
    edges = _clique_edges(u) + [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def anticomb(n: int) -> Graph:
    _need("anticomb", n)
    u = list(range(n))
    edges = _clique_edges(u) + [(j, n + i) for i in range(n) for j in range(n) if j != i]
    return Graph.from_edges(2 * n, edges)


def settled_comb(n: int) -> Graph:
    _need("settled_comb", n)
    u = list(range(n + 1))
    edges = _clique_edges(u) + [(i, n + i) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n + 1, edges)


def settled_anticomb(n: int) -> Graph:
    _need("settled_anticomb", n)
    u = list(range(n + 1))
    edges = _clique_edges(u)
    edges += [(j, n + i) for i in range(1, n + 1) for j in range(1, n + 1) if j != i]
    return Graph.from_edges(2 * n + 1, edges)


def cobip_matching(n: int) -> Graph:
    _need("cobip_matching", n)
    c = list(range(n + 1))
    d = list(range(n + 1, 2 * n + 2))
    edges = _clique_edges(c) + _clique_edges(d) + [(i, n + 1 + i) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n + 2, edges)


def subdiv_star(n: int) -> Graph:
    _need("subdiv_star", n)
    v0 = n + 1
    edges = [(0, v0)] + [(0, i) for i in range(1, n + 1)] + [(i, v0 + i) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n + 2, edges)


def band(n: int) -> Graph:
    _need("band", n)
    m = 2 * n
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m) if j - i < n])


def corona(H: Graph) -> Graph:
    """``H`` with a pendant vertex attached to every vertex."""
    k = H.n
    return Graph.from_edges(2 * k, list(H.edges()) + [(i, k + i) for i in range(k)])


def twin_expanded_corona(H: Graph) -> Graph:
    """Corona of ``H`` with ``2K1`` substituted for each vertex of ``H``.

    Vertex ``i`` of ``H`` becomes the pair ``(2i, 2i+1)``; the pendant of
    ``i`` is ``2*H.n + i``.  For ``H = C5`` this is a 15-vertex triangle-free
    CDC graph that is not König-Egerváry.
    """
    g = corona(H)
    # slots[i] = current id of H-vertex i, or of the pendant once all are expanded
    current = list(range(g.n))
    placed: list[tuple[int, int]] = []
    for i in range(H.n):
        g, g_map = substitute_graph(g, current[i], Graph.edgeless(2))
        current = [g_map.get(c, -1) for c in current]
        placed = [(g_map[a], g_map[b]) for a, b in placed] + [(0, 1)]
    # placed[i] holds the twin pair of H-vertex i; reorder to the documented layout
    order = [x for pair in placed for x in pair] + [current[H.n + i] for i in range(H.n)]
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "edgeless": edgeless,
    "comb": comb,
    "anticomb": anticomb,
    "settled_comb": settled_comb,
    "settled_anticomb": settled_anticomb,
    "cobip_matching": cobip_matching,
    "subdiv_star": subdiv_star,
    "band": band,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its size parameter; ``corona`` wraps a base spec."""

    family: str
    n: int | None = None
    base: FamilySpec | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family == "corona":
            if self.base is None:
                raise ValueError("corona needs a base family")
        else:
            _need(self.family, self.n)  # type: ignore[arg-type]

    def build(self) -> Graph:
        if self.family == "corona":
            return corona(self.base.build())  # type: ignore[union-attr]
        return _BUILDERS[self.family](self.n)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``name:n`` or ``corona:name:n``."""
        parts = text.split(":")
        if parts[0] == "corona":
            return cls("corona", base=cls.parse(":".join(parts[1:])))
        if len(parts) != 2:
            raise ValueError(f"expected FAMILY:N, got {text!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise ValueError(f"size must be an integer in {text!r}") from None
        return cls(parts[0], n)

    def __str__(self) -> str:
        if self.family == "corona":
            return f"corona:{self.base}"
        return f"{self.family}:{self.n}"


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    return spec.build()
