"""Constructors for the graph families used by the solver and its tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, build_graph

KINDS = ("path", "cycle", "star", "complete", "complete_bipartite", "wheel", "gp", "builtin")
BUILTINS = ("petersen", "figure1", "mcgee", "c8_chords", "c8_chords_plus_e")
PRODUCTS = ("cartesian", "strong", "lexicographic")

# Cubic girth-6 counterexample to the girth-7 bound (16 vertices).
FIGURE1_LABELS = ("a", "b", "a1", "a2", "a3", "b1", "b2", "b3",
                  "y1", "y2", "y3", "y4", "y5", "y6", "x1", "x2")
FIGURE1_EDGES = (
    ("a", "a1"), ("a", "a2"), ("a", "a3"), ("b", "b1"), ("b", "b2"), ("b", "b3"),
    ("a1", "y1"), ("a1", "y2"), ("a2", "y3"), ("a2", "y4"), ("a3", "y5"), ("a3", "y6"),
    ("b1", "y1"), ("b1", "y3"), ("b2", "y2"), ("b2", "y5"), ("b3", "y4"), ("b3", "y6"),
    ("x2", "y2"), ("x2", "y3"), ("x2", "y6"), ("x1", "y1"), ("x1", "y4"), ("x1", "y5"),
)

MCGEE_LCF = (12, 7, -7)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        object.__setattr__(self, "params", tuple(self.params))

    @classmethod
    def parse(cls, tokens: Sequence[str]) -> "FamilySpec":
        """Build a spec from CLI-style tokens, e.g. ``["gp", "7", "2"]``."""
        if not tokens:
            raise GraphError("empty family spec")
        kind, rest = tokens[0], list(tokens[1:])
        if kind == "builtin":
            if len(rest) != 1:
                raise GraphError("builtin takes exactly one name")
            return cls(kind, (rest[0],))
        try:
            return cls(kind, tuple(int(x) for x in rest))
        except ValueError:
            raise GraphError(f"family parameters must be integers: {rest}") from None

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.params)])


def _arity(spec: FamilySpec, count: int) -> tuple:
    if len(spec.params) != count:
        raise GraphError(f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")
    return spec.params


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}``: vertex 0 is the centre, ``n`` counts all vertices."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite needs m, n >= 1")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to the cycle on ``1 .. n-1``; ``n`` counts all vertices."""
    if n < 4:
        raise GraphError("wheel needs n >= 4 vertices in total")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return build_graph(n, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): ``a_i`` is vertex ``i`` and ``b_i`` is vertex ``n + i``."""
    if not (k >= 1 and n > 2 * k):
        raise GraphError(f"GP(n, k) requires n > 2k >= 2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    labels = [f"a_{i}" for i in range(n)] + [f"b_{i}" for i in range(n)]
    return build_graph(2 * n, edges, labels)


def lcf_graph(n: int, shifts: Sequence[int], repeats: int) -> Graph:
    jumps = list(shifts) * repeats
    if len(jumps) != n:
        raise GraphError("LCF notation does not cover every vertex")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + jumps[i]) % n) for i in range(n)]
    return build_graph(n, edges)


def figure1() -> Graph:
    index = {lab: i for i, lab in enumerate(FIGURE1_LABELS)}
    return build_graph(len(FIGURE1_LABELS), [(index[u], index[v]) for u, v in FIGURE1_EDGES],
                       FIGURE1_LABELS)


def _c8_chords(extra: bool) -> Graph:
    # vertices named 1..8 in the labels, 0-indexed internally
    pairs = [(i, i % 8 + 1) for i in range(1, 9)] + [(2, 8), (4, 6)]
    if extra:
        pairs.append((2, 6))
    return build_graph(8, [(u - 1, v - 1) for u, v in pairs], [str(i) for i in range(1, 9)])


def builtin(name: str) -> Graph:
    if name == "petersen":
        return generalized_petersen(5, 2)
    if name == "figure1":
        return figure1()
    if name == "mcgee":
        return lcf_graph(24, MCGEE_LCF, 8)
    if name == "c8_chords":
        return _c8_chords(False)
    if name == "c8_chords_plus_e":
        return _c8_chords(True)
    raise GraphError(f"unknown builtin graph {name!r}; expected one of {', '.join(BUILTINS)}")


def make_family(spec: FamilySpec) -> Graph:
    kind = spec.kind
    if kind == "builtin":
        (name,) = _arity(spec, 1)
        return builtin(name)
    if kind == "complete_bipartite":
        return complete_bipartite(*_arity(spec, 2))
    if kind == "gp":
        return generalized_petersen(*_arity(spec, 2))
    (n,) = _arity(spec, 1)
    return {"path": path, "cycle": cycle, "star": star,
            "complete": complete, "wheel": wheel}[kind](n)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    by_vertex: list[list[int]] = [[] for _ in range(g.order)]
    for idx, (u, v) in enumerate(edges):
        by_vertex[u].append(idx)
        by_vertex[v].append(idx)
    out = set()
    for incident in by_vertex:
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                out.add((incident[i], incident[j]))
    labels = [f"{g.label(u)}-{g.label(v)}" for u, v in edges]
    return build_graph(len(edges), sorted(out), labels)


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """Cartesian, strong or lexicographic product; ``(u, v)`` has index ``u*|V(h)| + v``."""
    if kind not in PRODUCTS:
        raise GraphError(f"unknown product {kind!r}; expected one of {', '.join(PRODUCTS)}")
    if g.order < 1 or h.order < 1:
        raise GraphError("product factors need at least one vertex")
    m = h.order
    edges = []
    for u1 in range(g.order):
        for v1 in range(m):
            a = u1 * m + v1
            for u2 in range(g.order):
                same_u = u1 == u2
                adj_u = g.has_edge(u1, u2)
                if not (same_u or adj_u):
                    continue
                for v2 in range(m):
                    b = u2 * m + v2
                    if b <= a:
                        continue
                    same_v = v1 == v2
                    adj_v = h.has_edge(v1, v2)
                    if kind == "cartesian":
                        ok = (same_u and adj_v) or (adj_u and same_v)
                    elif kind == "strong":
                        ok = (same_u or adj_u) and (same_v or adj_v)
                    else:
                        ok = adj_u or (same_u and adj_v)
                    if ok:
                        edges.append((a, b))
    labels = [f"({g.label(u)},{h.label(v)})" for u in range(g.order) for v in range(m)]
    return build_graph(g.order * m, edges, labels)
