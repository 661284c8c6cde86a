"""Immutable simple graphs with graph6 and edge-list I/O.

Vertices are the dense indices ``0 .. order-1``.  Every neighbourhood is
also kept as an integer bitmask (bit ``u`` set means ``u`` is present),
which is what the solver works with; Python integers grow as needed, so
there is no fixed vertex cap.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation requires a connected graph."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on ``0 .. order-1``.

    Use :func:`build_graph` (or the parsers) rather than calling the
    constructor with unchecked data.
    """

    __slots__ = ("_order", "_adj", "_nbr", "_closed", "_labels", "_edges")

    def __init__(self, order: int, adj: Sequence[frozenset[int]],
                 labels: Sequence[str] | None = None) -> None:
        self._order = order
        self._adj = tuple(adj)
        self._nbr = tuple(mask_of(a) for a in self._adj)
        self._closed = tuple(m | (1 << v) for v, m in enumerate(self._nbr))
        self._labels = tuple(labels) if labels is not None else None
        self._edges = tuple((u, v) for u in range(order) for v in sorted(self._adj[u]) if u < v)

    @property
    def order(self) -> int:
        return self._order

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def nbr_mask(self) -> tuple[int, ...]:
        """Open-neighbourhood bitmask per vertex."""
        return self._nbr

    @property
    def closed_mask(self) -> tuple[int, ...]:
        """Closed-neighbourhood bitmask ``N[v]`` per vertex."""
        return self._closed

    @property
    def all_mask(self) -> int:
        return (1 << self._order) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return list(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def closure(self, mask: int) -> int:
        """``N[S]`` for the vertex set encoded by ``mask``."""
        out = 0
        closed = self._closed
        while mask:
            low = mask & -mask
            out |= closed[low.bit_length() - 1]
            mask ^= low
        return out

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        if labels is not None and len(labels) != self._order:
            raise GraphError(f"expected {self._order} labels, got {len(labels)}")
        return Graph(self._order, self._adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._order, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={len(self._edges)})"


def build_graph(order: int, edges: Iterable[tuple[int, int]],
                labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; repeated edges are merged."""
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    adj: list[set[int]] = [set() for _ in range(order)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {tuple(pair)} has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop {tuple(pair)} is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    if labels is not None and len(labels) != order:
        raise GraphError(f"expected {order} labels, got {len(labels)}")
    return Graph(order, [frozenset(a) for a in adj], labels)


# ---------------------------------------------------------------- graph6

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a header-less graph6 string (no trailing newline)."""
    if g.order < 1:
        raise GraphError("graph6 needs at least one vertex")
    n = g.order
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"character {ch!r} at position {pos} is outside the graph6 range")
    data = [ord(c) - 63 for c in s]
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise GraphError("malformed graph6 length header")
    needed = math.ceil(n * (n - 1) // 2 / 6)
    if len(body) < needed:
        raise GraphError(f"graph6 body too short: need {needed} bytes, got {len(body)}")
    if len(body) > needed:
        raise GraphError(f"trailing garbage after graph6 body ({len(body) - needed} extra bytes)")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    """Parse a multi-graph graph6 corpus (one graph per non-blank line)."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# ------------------------------------------------------------- edge lists

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    Lines hold ``u v`` pairs; an optional first data line ``n <order>``
    fixes the order (otherwise ``1 + max index``).  ``#`` starts a comment.
    Comment lines of the form ``# label <v> <text>`` restore vertex labels.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            parts = stripped[1:].split(None, 2)
            if len(parts) == 3 and parts[0] == "label" and parts[1].isdigit():
                labels[int(parts[1])] = parts[2]
            continue
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] == "n" and not seen_data:
            if len(line) != 2:
                raise GraphError(f"line {lineno}: expected 'n <order>'")
            declared = _to_int(line[1], lineno)
            seen_data = True
            continue
        seen_data = True
        if len(line) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {len(line)} tokens")
        edges.append((_to_int(line[0], lineno), _to_int(line[1], lineno)))
    top = max((max(e) for e in edges), default=-1)
    if declared is None:
        if top < 0:
            raise GraphError("edge list has no edges and no 'n <order>' line")
        order = top + 1
    else:
        if declared <= top:
            raise GraphError(f"declared order {declared} is smaller than max index {top} + 1")
        order = declared
    label_list = None
    if labels:
        label_list = [labels.get(v, str(v)) for v in range(order)]
    return build_graph(order, edges, label_list)


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"]
    if g.labels is not None:
        lines.extend(f"# label {v} {lab}" for v, lab in enumerate(g.labels))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _to_int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: {tok!r} is not an integer") from None
    if value < 0:
        raise GraphError(f"line {lineno}: negative vertex index {value}")
    return value


# -------------------------------------------------------------- structure

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return False
    return min(bfs_distances(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected; solve each component separately")


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(bfs_distances(g, s)) for s in range(g.order))


def degeneracy(g: Graph) -> int:
    deg = [g.degree(v) for v in range(g.order)]
    alive = set(range(g.order))
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


@dataclass(frozen=True)
class GraphStats:
    order: int
    edge_count: int
    min_degree: int
    max_degree: int
    connected: bool
    girth: float
    degeneracy: int

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree


def graph_stats(g: Graph) -> GraphStats:
    if g.order < 1:
        raise GraphError("graph_stats needs at least one vertex")
    degrees = [g.degree(v) for v in range(g.order)]
    return GraphStats(
        order=g.order,
        edge_count=g.edge_count,
        min_degree=min(degrees),
        max_degree=max(degrees),
        connected=is_connected(g),
        girth=girth(g),
        degeneracy=degeneracy(g),
    )
