"""Brute-force reference solver.

Deliberately naive: cops are an ordered tuple (no multiset
canonicalisation), and the set of cop-winning states is grown by full
sweeps over all states until nothing changes.  It shares nothing with
:mod:`surround.solver` beyond the :class:`~surround.graph.Graph` type, so it is
used to cross-check the real solver on small graphs.
"""
from __future__ import annotations

from itertools import product

from .errors import BudgetExceeded
from .graph import Graph, require_connected

DEFAULT_ORACLE_BUDGET = 10**7


def naive_robber_wins(g: Graph, k: int, variant: str = "surround",
                      budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    variant = getattr(variant, "value", variant)
    if variant not in ("surround", "capture"):
        raise ValueError(f"unknown game {variant!r}")
    require_connected(g)
    n = g.order
    states = n ** (k + 1)
    if states > budget:
        raise BudgetExceeded("oracle states", states, budget)
    nbrs = [set(g.adj[v]) for v in range(n)]
    closed = [sorted(nbrs[v] | {v}) for v in range(n)]
    cop_tuples = list(product(range(n), repeat=k))
    moves = {c: list(product(*(closed[x] for x in c))) for c in cop_tuples}

    def caught(cops: tuple, r: int) -> bool:
        if variant == "capture":
            return r in cops
        return nbrs[r] <= set(cops)

    cops_win: set = set()     # cops to move
    robber_lost: set = set()  # robber to move
    changed = True
    while changed:
        changed = False
        for c in cop_tuples:
            for r in range(n):
                key = (c, r)
                if key not in robber_lost:
                    if caught(c, r) or all((c, x) in cops_win for x in closed[r] if x not in c):
                        robber_lost.add(key)
                        changed = True
                if r not in c and key not in cops_win:
                    if caught(c, r) or any((c2, r) in robber_lost for c2 in moves[c]):
                        cops_win.add(key)
                        changed = True
    for c in cop_tuples:
        if all((c, r) in cops_win for r in range(n) if r not in c):
            return False
    return True


def naive_game_number(g: Graph, variant: str = "surround",
                      budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    for k in range(1, g.order + 1):
        if not naive_robber_wins(g, k, variant, budget):
            return k
    raise AssertionError("robber beats |V| cops, which is impossible")
