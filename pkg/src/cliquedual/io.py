"""Text formats: graph6, plain edge lists, and the hypergraph format.

Edge list::

    n
    u v
    ...

Hypergraph::

    n m
    v v v      (m lines, 0-based ids)

Blank lines and ``#`` comments are ignored in both plain formats.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .bits import to_tuple
from .errors import ParseError
from .graph import Graph
from .hypergraph import Hypergraph

GRAPH6_MAX = 62
_HEADER = ">>graph6<<"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def to_graph6(G: Graph) -> str:
    n = G.n
    if n > GRAPH6_MAX:
        raise ValueError(f"graph6 writer supports at most {GRAPH6_MAX} vertices")
    bits = []
    for j in range(1, n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", line)
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError(f"invalid graph6 character in {s!r}", line)
    if s[0] == "~":
        raise ParseError(f"graph6 input with more than {GRAPH6_MAX} vertices is not supported", line)
    n = ord(s[0]) - 63
    if n == 0:
        raise ParseError("graph6 encodes the null graph; at least one vertex is required", line)
    need = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}", line)
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for no, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield from_graph6(s, no)


# ---------------------------------------------------------------------------
# plain formats
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            out.append((no, body))
    return out


def _ints(tokens: list[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def to_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty edge list")
    no, head = rows[0]
    if len(head) != 1:
        raise ParseError("edge list must start with the vertex count", no)
    (n,) = _ints(head, no)
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", no)
    adj = [0] * n
    for no, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(toks)!r}", no)
        u, v = _ints(toks, no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", no)
        if u == v:
            raise ParseError(f"self-loop at {u}", no)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def to_hypergraph_text(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.m}"] + [" ".join(map(str, to_tuple(e))) for e in H.edges]
    return "\n".join(lines) + "\n"


def from_hypergraph_text(text: str, allow_uncovered: bool = False) -> Hypergraph:
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty hypergraph file")
    no, head = rows[0]
    if len(head) != 2:
        raise ParseError("hypergraph file must start with 'n m'", no)
    n, m = _ints(head, no)
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}", no)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else no
        raise ParseError(f"header announces {m} hyperedges, found {len(body)}", last)
    edges = []
    for no, toks in body:
        e = 0
        for v in _ints(toks, no):
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", no)
            e |= 1 << v
        edges.append(e)
    try:
        return Hypergraph(n, tuple(edges), allow_uncovered=allow_uncovered)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# auto-detection
# ---------------------------------------------------------------------------


def detect_format(text: str) -> str:
    """``edgelist`` if the first line is one integer, ``hypergraph`` if two,
    ``graph6`` otherwise."""
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty input")
    toks = rows[0][1]
    if all(t.lstrip("-").isdigit() for t in toks):
        if len(toks) == 1:
            return "edgelist"
        if len(toks) == 2:
            return "hypergraph"
    return "graph6"


def read_graphs(text: str) -> list[Graph]:
    fmt = detect_format(text)
    if fmt == "edgelist":
        return [from_edge_list(text)]
    if fmt == "hypergraph":
        raise ParseError("expected a graph, got a hypergraph file")
    return list(iter_graph6(text.splitlines()))


def read_graph(text: str) -> Graph:
    graphs = read_graphs(text)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def read_hypergraph(text: str) -> Hypergraph:
    if detect_format(text) != "hypergraph":
        raise ParseError("expected a hypergraph file starting with 'n m'")
    return from_hypergraph_text(text)


def read_any(text: str) -> Graph | Hypergraph:
    if detect_format(text) == "hypergraph":
        return from_hypergraph_text(text)
    return read_graph(text)
