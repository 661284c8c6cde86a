"""The robber-safe-set map and its greatest fixed point.

For every cop configuration ``T`` the map holds the set of vertices the
robber may stand on, with the cops at ``T`` and about to move, without
losing.  It starts as every vertex that is not occupied, not already
surrounded and not surroundable in one cop round (capture game: not
within reach of a cop), and is then refined until, for every one-round
move ``T -> T'``, ``psi(T)`` lies inside ``N[psi(T')]``.

Two schedules compute the same greatest fixed point:

``worklist``
    Whenever ``psi(T')`` shrinks, the intersection of ``N[psi(.)]`` over
    the successors of each neighbour ``T`` is updated incrementally
    through a :class:`MoveDAG`, and neighbours whose set changes are
    queued.
``faithful``
    Literal edge sweeps over the explicit configuration graph, repeated
    until nothing changes.  Needs the full edge list, so it is only
    meant for small instances.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..errors import BudgetExceeded
from ..graph import Graph, bits, require_connected
from .configs import (
    DEFAULT_CONFIG_BUDGET,
    CopConfig,
    MoveDAG,
    Variant,
    check_config_budget,
    config_successors,
    enumerate_configs,
    surroundable_in_one,
)

log = logging.getLogger(__name__)

MODES = ("worklist", "faithful")
DEFAULT_EDGE_BUDGET = 3_000_000


@dataclass
class PsiMap:
    graph: Graph
    k: int
    variant: Variant
    configs: list[CopConfig]
    index: dict[CopConfig, int]
    psi: list[int]
    occupied: list[int]
    surrounded: list[int]
    threatened: list[int]
    rounds: int = 0
    stopped_early: bool = False
    _dag: MoveDAG | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.configs)

    def mask(self, t: CopConfig) -> int:
        return self.psi[self.index[tuple(t)]]

    def __getitem__(self, t: CopConfig) -> frozenset[int]:
        return frozenset(bits(self.mask(t)))

    def empty_anywhere(self) -> bool:
        return any(p == 0 for p in self.psi)

    def nonempty_everywhere(self) -> bool:
        return all(self.psi)

    def copy(self) -> "PsiMap":
        return PsiMap(self.graph, self.k, self.variant, self.configs, self.index,
                      list(self.psi), self.occupied, self.surrounded, self.threatened,
                      self.rounds, self.stopped_early, self._dag)

    def move_dag(self) -> MoveDAG:
        if self._dag is None:
            self._dag = MoveDAG(self.graph, self.configs, self.index)
        return self._dag


def init_psi(g: Graph, k: int, variant: Variant | str = Variant.SURROUND,
             budget: int = DEFAULT_CONFIG_BUDGET) -> PsiMap:
    """Initial map ``V \\ (A_T | B_T | C_T)`` for every configuration ``T``.

    ``A_T`` is the set of occupied vertices.  Surround game: ``B_T`` are
    the vertices whose neighbourhood is occupied and ``C_T`` the vertices
    the cops can surround in one round.  Capture game: ``B_T = A_T`` and
    ``C_T = N[A_T]``.
    """
    variant = Variant(variant)
    require_connected(g)
    if not 1 <= k <= g.order:
        raise ValueError(f"number of cops must be in 1..{g.order}, got {k}")
    check_config_budget(g.order, k, budget)
    configs = enumerate_configs(g.order, k)
    index = {t: i for i, t in enumerate(configs)}
    full = g.all_mask
    nbr = g.nbr_mask
    closed = g.closed_mask
    small = [v for v in range(g.order) if g.degree(v) <= k]
    occupied, surrounded, threatened, psi = [], [], [], []
    for t in configs:
        a = 0
        reach = 0
        for c in t:
            a |= 1 << c
            reach |= closed[c]
        if variant is Variant.CAPTURE:
            b = a
            c_mask = reach
        else:
            b = 0
            c_mask = 0
            for v in small:
                if nbr[v] & ~a == 0:
                    b |= 1 << v
                    c_mask |= 1 << v
                elif nbr[v] & ~reach == 0 and surroundable_in_one(g, t, v):
                    c_mask |= 1 << v
        occupied.append(a)
        surrounded.append(b)
        threatened.append(c_mask)
        psi.append(full & ~(a | b | c_mask))
    return PsiMap(g, k, variant, configs, index, psi, occupied, surrounded, threatened)


def refine_to_fixpoint(g: Graph, psi: PsiMap, mode: str = "worklist",
                       stop_on_empty: bool = False,
                       edge_budget: int = DEFAULT_EDGE_BUDGET) -> PsiMap:
    """Return the refined copy of ``psi``.

    With ``stop_on_empty`` the worklist schedule stops as soon as some
    set becomes empty: on a connected graph the fixed point is then empty
    everywhere, so the verdict is already known (the returned map is not
    the full fixed point and is flagged ``stopped_early``).
    """
    if mode == "worklist":
        return _refine_worklist(g, psi.copy(), stop_on_empty)
    if mode == "faithful":
        return _refine_faithful(g, psi.copy(), edge_budget)
    raise ValueError(f"unknown refinement mode {mode!r}; expected one of {MODES}")


def _refine_worklist(g: Graph, pm: PsiMap, stop_on_empty: bool) -> PsiMap:
    dag = pm.move_dag()
    k = dag.k
    psi = pm.psi
    closure = g.closure
    if stop_on_empty and not all(psi):
        pm.stopped_early = True
        return pm
    leaf = [closure(p) for p in psi]
    values = dag.fold_and(leaf)
    parents = dag.parents()
    root = values[0]
    work = []
    for t, p in enumerate(psi):
        q = p & root[t]
        if q != p:
            psi[t] = q
            work.append(t)
            if stop_on_empty and not q:
                pm.stopped_early = True
                return pm
    pops = 0
    while work:
        t = work.pop()
        pops += 1
        x = closure(psi[t])
        if x == leaf[t]:
            continue
        leaf[t] = x
        stack = [(k, t, x)]
        while stack:
            level, node, v = stack.pop()
            up = values[level - 1]
            for p in parents[level][node]:
                old = up[p]
                new = old & v
                if new == old:
                    continue
                up[p] = new
                if level - 1:
                    stack.append((level - 1, p, new))
                    continue
                q = psi[p] & new
                if q != psi[p]:
                    psi[p] = q
                    work.append(p)
                    if stop_on_empty and not q:
                        pm.rounds = pops
                        pm.stopped_early = True
                        return pm
    pm.rounds = pops
    return pm


def configuration_edges(g: Graph, pm: PsiMap, edge_budget: int = DEFAULT_EDGE_BUDGET) -> list[tuple[int, int]]:
    """Edges ``(i, j)``, ``i < j``, of the configuration graph (no loops)."""
    edges = []
    index = pm.index
    for i, t in enumerate(pm.configs):
        for s in config_successors(g, t):
            j = index[s]
            if j > i:
                edges.append((i, j))
        if len(edges) > edge_budget:
            raise BudgetExceeded("configuration graph edges", len(edges), edge_budget)
    return edges


def _refine_faithful(g: Graph, pm: PsiMap, edge_budget: int) -> PsiMap:
    edges = configuration_edges(g, pm, edge_budget)
    psi = pm.psi
    closure = g.closure
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for i, j in edges:
            new_i = psi[i] & closure(psi[j])
            if new_i != psi[i]:
                psi[i] = new_i
                changed = True
            new_j = psi[j] & closure(psi[i])
            if new_j != psi[j]:
                psi[j] = new_j
                changed = True
    pm.rounds = sweeps
    return pm


def check_properties(g: Graph, pm: PsiMap) -> None:
    """Assert that ``pm`` avoids ``A|B|C`` and is closed under the move relation."""
    for i, t in enumerate(pm.configs):
        bad = pm.psi[i] & (pm.occupied[i] | pm.surrounded[i] | pm.threatened[i])
        if bad:
            raise AssertionError(f"psi{t} meets A|B|C at {sorted(bits(bad))}")
        for s in config_successors(g, t):
            j = pm.index[s]
            if pm.psi[i] & ~g.closure(pm.psi[j]):
                raise AssertionError(f"psi{t} is not inside N[psi{s}]")
