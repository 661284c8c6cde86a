"""Lower and upper bounds on the surrounding cop number.

Lower bounds: minimum degree, clique number minus one, and minimum degree
plus one on graphs of girth at least 7 with minimum degree at least 3.
Upper bounds: the size of a minimum vertex cover (``|V| - alpha``) and
one more than the width of a greedy elimination ordering, which is at
least the treewidth.

Clique and independence numbers come from an exact branch-and-bound
search.  When its node budget runs out the best clique found so far is
used instead; since that is still a clique (resp. independent set) the
bounds stay valid and only get looser.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .graph import Graph, girth, require_connected

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class CliqueResult:
    clique: tuple[int, ...]
    exact: bool
    nodes: int

    @property
    def size(self) -> int:
        return len(self.clique)


def _color_sort(p: int, nbr: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Greedy colouring of candidate set ``p``; returns vertices and colour bounds."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = p
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~nbr[v] & ~low
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def _max_clique_masks(n: int, nbr: tuple[int, ...], budget: int) -> CliqueResult:
    best: list[int] = []
    nodes = 0
    aborted = False

    def expand(r: list[int], p: int) -> None:
        nonlocal best, nodes, aborted
        order, colors = _color_sort(p, nbr)
        for i in range(len(order) - 1, -1, -1):
            if aborted or len(r) + colors[i] <= len(best):
                return
            nodes += 1
            if nodes > budget:
                aborted = True
                return
            v = order[i]
            r.append(v)
            newp = p & nbr[v]
            if newp:
                expand(r, newp)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return CliqueResult(tuple(sorted(best)), not aborted, nodes)


def max_clique(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> CliqueResult:
    return _max_clique_masks(g.order, g.nbr_mask, budget)


def max_independent_set(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> CliqueResult:
    full = g.all_mask
    comp = tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.nbr_mask))
    return _max_clique_masks(g.order, comp, budget)


def elimination_width(g: Graph, heuristic: str = "min_fill") -> tuple[int, list[int]]:
    """Width of a greedy elimination ordering (``min_degree`` or ``min_fill``).

    The width is the largest number of not-yet-eliminated neighbours a
    vertex has when it is eliminated; it is an upper bound on treewidth.
    """
    if heuristic not in ("min_degree", "min_fill"):
        raise ValueError(f"unknown heuristic {heuristic!r}")
    adj = {v: set(g.adj[v]) for v in range(g.order)}
    width = 0
    ordering = []

    def fill(v: int) -> int:
        nb = list(adj[v])
        return sum(1 for i in range(len(nb)) for j in range(i + 1, len(nb))
                   if nb[j] not in adj[nb[i]])

    while adj:
        if heuristic == "min_degree":
            v = min(adj, key=lambda x: (len(adj[x]), x))
        else:
            v = min(adj, key=lambda x: (fill(x), len(adj[x]), x))
        nb = adj.pop(v)
        width = max(width, len(nb))
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
        ordering.append(v)
    return width, ordering


@dataclass(frozen=True)
class BoundReport:
    delta: int
    clique_minus_one: int
    girth_rule: int | None
    vertex_cover: int
    elim_width_plus_one: int
    lo: int
    hi: int
    exact: bool = True
    warnings: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "clique_minus_one": self.clique_minus_one,
            "girth_rule": self.girth_rule,
            "vertex_cover": self.vertex_cover,
            "elim_width_plus_one": self.elim_width_plus_one,
            "lo": self.lo,
            "hi": self.hi,
            "exact": self.exact,
            "warnings": list(self.warnings),
        }


def _min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.order))


def lower_bounds(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, int, int | None]:
    """``(delta, omega - 1, girth rule or None)``."""
    require_connected(g)
    delta = _min_degree(g)
    omega = max_clique(g, budget)
    if not omega.exact:
        log.warning("clique search hit its node budget; using clique of size %d", omega.size)
    rule = delta + 1 if delta >= 3 and girth(g) >= 7 else None
    return delta, omega.size - 1, rule


def upper_bounds(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, int]:
    """``(|V| - alpha, elimination width + 1)``."""
    require_connected(g)
    alpha = max_independent_set(g, budget)
    if not alpha.exact:
        log.warning("independence search hit its node budget; using set of size %d", alpha.size)
    width = min(elimination_width(g, "min_degree")[0], elimination_width(g, "min_fill")[0])
    return g.order - alpha.size, width + 1


def bound_report(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> BoundReport:
    require_connected(g)
    delta = _min_degree(g)
    omega = max_clique(g, budget)
    alpha = max_independent_set(g, budget)
    rule = delta + 1 if delta >= 3 and girth(g) >= 7 else None
    width = min(elimination_width(g, "min_degree")[0], elimination_width(g, "min_fill")[0])
    warnings = []
    if not omega.exact:
        warnings.append(f"clique search aborted after {omega.nodes} nodes")
    if not alpha.exact:
        warnings.append(f"independence search aborted after {alpha.nodes} nodes")
    vertex_cover = g.order - alpha.size
    lows = [delta, omega.size - 1] + ([rule] if rule is not None else [])
    # at least one cop is always required, so both ends are clamped at 1
    lo = max(1, *lows)
    hi = max(1, min(vertex_cover, width + 1))
    if lo > hi:
        raise AssertionError(f"bound bracket is empty: lo={lo} > hi={hi}")
    return BoundReport(delta, omega.size - 1, rule, vertex_cover, width + 1, lo, hi,
                       exact=omega.exact and alpha.exact, warnings=tuple(warnings))


def bracket(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, int]:
    rep = bound_report(g, budget)
    return rep.lo, rep.hi
