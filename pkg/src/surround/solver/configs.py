"""Cop configurations and the one-round cop move relation.

A configuration of ``k`` cops is a sorted tuple of vertices (a multiset;
several cops may share a vertex).  Configurations are enumerated in
lexicographic order, which is also their canonical index order.
"""
from __future__ import annotations

import enum
import math
from bisect import insort
from itertools import combinations_with_replacement
from typing import Sequence

from ..errors import BudgetExceeded
from ..graph import Graph

CopConfig = tuple[int, ...]

DEFAULT_CONFIG_BUDGET = 5_000_000


class Variant(str, enum.Enum):
    SURROUND = "surround"
    CAPTURE = "capture"


def config_count(n: int, k: int) -> int:
    return math.comb(n + k - 1, k)


def check_config_budget(n: int, k: int, budget: int) -> int:
    need = config_count(n, k)
    if need > budget:
        raise BudgetExceeded(f"{k}-cop configurations on {n} vertices", need, budget)
    return need


def enumerate_configs(n: int, k: int) -> list[CopConfig]:
    return list(combinations_with_replacement(range(n), k))


def canonical(positions: Sequence[int]) -> CopConfig:
    return tuple(sorted(positions))


def config_successors(g: Graph, t: CopConfig) -> set[CopConfig]:
    """All configurations reachable in one cop round, including ``t`` (every cop passes)."""
    partial: set[CopConfig] = {()}
    for c in t:
        moves = g.closed_neighbors(c)
        nxt = set()
        for p in partial:
            for u in moves:
                q = list(p)
                insort(q, u)
                nxt.add(tuple(q))
        partial = nxt
    return partial


def occupied_mask(t: CopConfig) -> int:
    m = 0
    for c in t:
        m |= 1 << c
    return m


def surroundable_in_one(g: Graph, t: CopConfig, v: int) -> bool:
    """Can the cops at ``t`` occupy every neighbour of ``v`` after one round?

    Each neighbour needs its own cop, and a cop can only reach vertices of
    its closed neighbourhood, so this is a bipartite matching question
    (Kuhn's augmenting paths) between ``N(v)`` and the cop tokens.
    """
    targets = sorted(g.adj[v])
    k = len(t)
    if len(targets) > k:
        return False
    closed = g.closed_mask
    reach = [closed[c] for c in t]
    owner = [-1] * k          # cop -> matched target

    def augment(x: int, seen: list[bool]) -> bool:
        for i in range(k):
            if not seen[i] and (reach[i] >> x) & 1:
                seen[i] = True
                if owner[i] < 0 or augment(owner[i], seen):
                    owner[i] = x
                    return True
        return False

    for x in targets:
        if not augment(x, [False] * k):
            return False
    return True


class MoveDAG:
    """Factored form of the cop move relation.

    Node ``(U, W)`` at level ``i`` stands for "the cops in ``U`` have
    already moved, the cops in ``W`` still have to", with ``|U| = i``.
    Its children move the smallest cop of ``W`` to each vertex of its
    closed neighbourhood.  Level 0 nodes are the configurations and the
    level-``k`` nodes are again configurations (the move results), so
    folding a per-configuration value up the DAG with ``&`` gives, at each
    root, the intersection of that value over all one-round successors.
    Level 0 and level ``k`` both use configuration indices.
    """

    def __init__(self, g: Graph, configs: Sequence[CopConfig], index: dict[CopConfig, int]) -> None:
        k = len(configs[0])
        self.k = k
        closed = [sorted(g.closed_neighbors(v)) for v in range(g.order)]
        self.children: list[list[list[int]]] = []
        keys: dict | None = None
        prev = [((), t) for t in configs]
        for level in range(k):
            last = level == k - 1
            keys = {}
            kids_level = []
            for moved, todo in prev:
                w, rest = todo[0], todo[1:]
                row = []
                for u in closed[w]:
                    m = list(moved)
                    insort(m, u)
                    m = tuple(m)
                    if last:
                        row.append(index[m])
                    else:
                        key = (m, rest)
                        idx = keys.get(key)
                        if idx is None:
                            idx = keys[key] = len(keys)
                        row.append(idx)
                kids_level.append(row)
            self.children.append(kids_level)
            if not last:
                prev = list(keys)
        self.sizes = [len(configs)] + [len(c) for c in self.children[1:]] + [len(configs)]

    @property
    def node_count(self) -> int:
        return sum(self.sizes[:-1])

    def fold_and(self, leaf_values: Sequence[int]) -> list[list[int]]:
        """Values at every level when each node is the AND of its children.

        Returned list is indexed by level; entry ``k`` is ``leaf_values``.
        """
        values: list[list[int]] = [[] for _ in range(self.k + 1)]
        values[self.k] = list(leaf_values)
        for level in range(self.k - 1, -1, -1):
            below = values[level + 1]
            out = []
            for row in self.children[level]:
                acc = -1
                for c in row:
                    acc &= below[c]
                out.append(acc)
            values[level] = out
        return values

    def fold_or(self, leaf_values: Sequence[int]) -> list[int]:
        """Per-root OR of ``leaf_values`` over all successors."""
        below = list(leaf_values)
        for level in range(self.k - 1, -1, -1):
            out = []
            for row in self.children[level]:
                acc = 0
                for c in row:
                    acc |= below[c]
                out.append(acc)
            below = out
        return below

    def parents(self) -> list[list[list[int]]]:
        """``parents[i][node]``: parent indices (at level ``i-1``) of a level-``i`` node."""
        out: list[list[list[int]]] = [[]]
        for level in range(self.k):
            par: list[list[int]] = [[] for _ in range(self.sizes[level + 1])]
            for p, row in enumerate(self.children[level]):
                for c in set(row):
                    par[c].append(p)
            out.append(par)
        return out
