"""Checkable winning strategies.

Cop strategies come from retrograde analysis (a reachability attractor)
over explicit game states, which is independent of the safe-set
refinement in :mod:`surround.solver`.  Robber strategies are read off a
non-empty safe-set fixed point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Protocol

from .errors import BudgetExceeded, StrategyError
from .graph import Graph, bits, require_connected
from .solver.configs import (
    CopConfig,
    Variant,
    check_config_budget,
    config_successors,
    enumerate_configs,
    occupied_mask,
)
from .solver.psi import PsiMap

DEFAULT_STATE_BUDGET = 2_000_000


class Side(str, enum.Enum):
    COPS = "cops"
    ROBBER = "robber"


@dataclass(frozen=True)
class GameState:
    config: CopConfig
    robber: int
    mover: Side


# ----------------------------------------------------------------- rules

def is_cop_win(g: Graph, variant: Variant | str, config: CopConfig, robber: int) -> bool:
    occ = occupied_mask(config)
    if Variant(variant) is Variant.CAPTURE:
        return bool((occ >> robber) & 1)
    return g.nbr_mask[robber] & ~occ == 0


def legal_robber_moves(g: Graph, config: CopConfig, robber: int) -> list[int]:
    """Vertices the robber may move to (or stay on); occupied vertices are excluded.

    A robber whose vertex is occupied therefore has to leave it.
    """
    return list(bits(g.closed_mask[robber] & ~occupied_mask(config)))


def legal_placements(g: Graph, config: CopConfig) -> list[int]:
    return list(bits(g.all_mask & ~occupied_mask(config)))


# ------------------------------------------------------ retrograde solve

@dataclass
class StrategyTable:
    graph: Graph
    k: int
    variant: Variant
    configs: list[CopConfig]
    index: dict[CopConfig, int]
    cop_rank: list[int]
    robber_rank: list[int]
    cop_move: list[int]
    initial: CopConfig
    initial_rank: int

    @property
    def state_count(self) -> int:
        return 2 * len(self.configs) * self.graph.order

    def _sid(self, config: CopConfig, robber: int) -> int:
        return self.index[tuple(config)] * self.graph.order + robber

    def rank(self, state: GameState) -> int | None:
        """Rounds of cop moves needed to win from ``state``; ``None`` if the cops cannot force it."""
        table = self.cop_rank if state.mover is Side.COPS else self.robber_rank
        r = table[self._sid(state.config, state.robber)]
        return None if r < 0 else r

    def move(self, config: CopConfig, robber: int) -> CopConfig:
        j = self.cop_move[self._sid(config, robber)]
        if j < 0:
            raise StrategyError(f"no stored cop move for cops {tuple(config)}, robber {robber}")
        return self.configs[j]


def solve_positions(g: Graph, k: int, variant: Variant | str = Variant.SURROUND,
                    budget: int = DEFAULT_STATE_BUDGET) -> StrategyTable | None:
    """Cop strategy for ``k`` cops, or ``None`` when the robber can evade them.

    Cop-to-move states win if some successor wins; robber-to-move states
    win if every legal robber move leads to a win.  Ranks count cop
    rounds to the win; among equally fast cop moves the lowest-indexed
    successor configuration is stored.
    """
    variant = Variant(variant)
    require_connected(g)
    n = g.order
    check_config_budget(n, k, budget)
    configs = enumerate_configs(n, k)
    states = 2 * len(configs) * n
    if states > budget:
        raise BudgetExceeded("game states", states, budget)
    index = {t: i for i, t in enumerate(configs)}
    succ = [sorted(index[s] for s in config_successors(g, t)) for t in configs]
    occ = [occupied_mask(t) for t in configs]
    nbr, closed = g.nbr_mask, g.closed_mask
    size = len(configs) * n
    cop_rank = [-1] * size
    rob_rank = [-1] * size
    cop_move = [-1] * size
    pending = [0] * size

    def terminal(ci: int, r: int) -> bool:
        if variant is Variant.CAPTURE:
            return bool((occ[ci] >> r) & 1)
        return nbr[r] & ~occ[ci] == 0

    cop_frontier, rob_frontier = [], []
    for ci in range(len(configs)):
        base = ci * n
        for r in range(n):
            if terminal(ci, r):
                rob_rank[base + r] = 0
                rob_frontier.append(base + r)
                if not (occ[ci] >> r) & 1:
                    cop_rank[base + r] = 0
                    cop_frontier.append(base + r)
            else:
                pending[base + r] = (closed[r] & ~occ[ci]).bit_count()

    d = 0
    while cop_frontier or rob_frontier:
        for sid in cop_frontier:
            ci, r2 = divmod(sid, n)
            # robber states (ci, r) with r2 a legal reply from r
            for r in bits(closed[r2]):
                rs = ci * n + r
                if rob_rank[rs] < 0:
                    pending[rs] -= 1
                    if pending[rs] == 0:
                        rob_rank[rs] = d
                        rob_frontier.append(rs)
        nxt = []
        for rs in rob_frontier:
            cj, r = divmod(rs, n)
            for ci in succ[cj]:
                if (occ[ci] >> r) & 1:
                    continue
                cs = ci * n + r
                if cop_rank[cs] < 0:
                    cop_rank[cs] = d + 1
                    cop_move[cs] = cj
                    nxt.append(cs)
                elif cop_rank[cs] == d + 1 and cj < cop_move[cs]:
                    cop_move[cs] = cj
        cop_frontier, rob_frontier = nxt, []
        d += 1

    best = None
    for ci, t in enumerate(configs):
        worst = 0
        for r in bits(g.all_mask & ~occ[ci]):
            rank = cop_rank[ci * n + r]
            if rank < 0:
                break
            worst = max(worst, rank)
        else:
            if best is None or worst < best[0]:
                best = (worst, ci)
    if best is None:
        return None
    return StrategyTable(g, k, variant, configs, index, cop_rank, rob_rank, cop_move,
                         configs[best[1]], best[0])


# ----------------------------------------------------------------- robber

class RobberAgent(Protocol):
    def place(self, config: CopConfig) -> int: ...

    def respond(self, config: CopConfig, robber: int) -> int: ...


class RobberPolicy:
    """Evasion policy from a safe-set fixed point that is non-empty everywhere.

    Places on the smallest vertex of ``psi(T0)``; after the cops move to
    ``T2`` it moves to the smallest vertex of ``N[v] & psi(T2)``.
    """

    def __init__(self, psi: PsiMap) -> None:
        if not psi.nonempty_everywhere():
            raise ValueError("the safe-set map is empty somewhere: the cops win, there is no evasion policy")
        self.psi = psi
        self.graph = psi.graph

    def place(self, config: CopConfig) -> int:
        return (self.psi.mask(config) & -self.psi.mask(config)).bit_length() - 1

    def respond(self, config: CopConfig, robber: int) -> int:
        options = self.graph.closed_mask[robber] & self.psi.mask(config)
        if not options:
            raise StrategyError(f"robber at {robber} has no safe reply to cops {tuple(config)}")
        return (options & -options).bit_length() - 1


def robber_policy(psi: PsiMap) -> RobberPolicy:
    return RobberPolicy(psi)


def verify_robber_policy(g: Graph, policy: RobberAgent, k: int,
                         variant: Variant | str = Variant.SURROUND,
                         budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Play every cop line against ``policy``; raise if the robber is ever caught.

    Cop-to-move states already seen are not expanded again.  Returns the
    number of distinct states explored.
    """
    variant = Variant(variant)
    configs = enumerate_configs(g.order, k)
    seen: set[tuple[CopConfig, int]] = set()
    stack = []
    for t in configs:
        if not legal_placements(g, t):
            raise StrategyError(f"robber cannot be placed against cops {t}")
        r = policy.place(t)
        _check_robber(g, variant, t, r, None)
        stack.append((t, r))
    while stack:
        t, r = stack.pop()
        if (t, r) in seen:
            continue
        seen.add((t, r))
        if len(seen) > budget:
            raise BudgetExceeded("policy verification states", len(seen), budget)
        for t2 in config_successors(g, t):
            if is_cop_win(g, variant, t2, r):
                raise StrategyError(f"cops {t} -> {t2} beat the robber at {r}")
            r2 = policy.respond(t2, r)
            _check_robber(g, variant, t2, r2, r)
            if (t2, r2) not in seen:
                stack.append((t2, r2))
    return len(seen)


def _check_robber(g: Graph, variant: Variant, t: CopConfig, r: int, prev: int | None) -> None:
    allowed = legal_placements(g, t) if prev is None else legal_robber_moves(g, t, prev)
    if r not in allowed:
        raise StrategyError(f"robber move to {r} is illegal against cops {t}")
    if is_cop_win(g, variant, t, r):
        raise StrategyError(f"robber walked into a lost position at {r} against cops {t}")


# --------------------------------------------------------------- playing

@dataclass(frozen=True)
class Round:
    number: int
    cops: CopConfig
    robber: int
    mover: Side


@dataclass
class Transcript:
    variant: Variant
    rounds: list[Round] = field(default_factory=list)
    outcome: str = "unfinished"
    cop_rounds: int = 0
    states_checked: int = 0
    bound: int = 0

    def to_lines(self, g: Graph | None = None) -> list[str]:
        def name(v: int) -> str:
            return g.label(v) if g is not None else str(v)
        out = []
        for rd in self.rounds:
            cops = " ".join(name(c) for c in rd.cops)
            out.append(f"round {rd.number} {rd.mover.value:>6} moved: cops [{cops}] robber {name(rd.robber)}")
        out.append(f"outcome: {self.outcome} after {self.cop_rounds} cop rounds")
        return out

    def to_records(self) -> list[dict]:
        return [{"round": rd.number, "mover": rd.mover.value, "cops": list(rd.cops),
                 "robber": rd.robber} for rd in self.rounds]


def _win_word(variant: Variant) -> str:
    return "captured" if variant is Variant.CAPTURE else "surrounded"


def simulate(g: Graph, table: StrategyTable, robber: RobberAgent | str = "exhaustive",
             max_rounds: int | None = None) -> Transcript:
    """Play the table's cop strategy.

    Against a robber agent, one game is played and recorded.  With
    ``"exhaustive"`` every robber reply is explored; each cop round must
    strictly lower the rank and every branch must end in a cop win within
    the initial rank.  The transcript then records a longest line.
    """
    if robber == "exhaustive":
        return _simulate_exhaustive(g, table)
    variant = table.variant
    t = table.initial
    limit = max_rounds if max_rounds is not None else table.initial_rank
    tr = Transcript(variant, bound=table.initial_rank)
    if not legal_placements(g, t):
        tr.outcome = _win_word(variant)
        return tr
    r = robber.place(t)
    _require_legal(g, t, r, None)
    tr.rounds.append(Round(0, t, r, Side.ROBBER))
    while True:
        if is_cop_win(g, variant, t, r):
            tr.outcome = _win_word(variant)
            return tr
        before = table.rank(GameState(t, r, Side.COPS))
        if before is None:
            raise StrategyError(f"state cops {t} robber {r} is not winning for the cops")
        if tr.cop_rounds >= limit:
            raise StrategyError(f"cops exceeded their {limit} round bound")
        t2 = table.move(t, r)
        tr.cop_rounds += 1
        tr.rounds.append(Round(tr.cop_rounds, t2, r, Side.COPS))
        after = table.rank(GameState(t2, r, Side.ROBBER))
        if after is None or after >= before:
            raise StrategyError(f"rank did not decrease on cops {t} -> {t2} (robber {r})")
        if is_cop_win(g, variant, t2, r):
            tr.outcome = _win_word(variant)
            return tr
        r2 = robber.respond(t2, r)
        _require_legal(g, t2, r2, r)
        tr.rounds.append(Round(tr.cop_rounds, t2, r2, Side.ROBBER))
        t, r = t2, r2


def _require_legal(g: Graph, t: CopConfig, r: int, prev: int | None) -> None:
    allowed = legal_placements(g, t) if prev is None else legal_robber_moves(g, t, prev)
    if r not in allowed:
        raise StrategyError(f"illegal robber move to {r} against cops {t}; legal: {allowed}")


def _simulate_exhaustive(g: Graph, table: StrategyTable) -> Transcript:
    variant = table.variant
    t0 = table.initial
    tr = Transcript(variant, bound=table.initial_rank)
    # longest[(t, r)] = cop rounds still needed on the worst line from this cop-to-move state
    longest: dict[tuple[CopConfig, int], int] = {}
    best_reply: dict[tuple[CopConfig, int], int] = {}

    def visit(t: CopConfig, r: int) -> int:
        key = (t, r)
        if key in longest:
            return longest[key]
        if is_cop_win(g, variant, t, r):
            longest[key] = 0
            return 0
        before = table.rank(GameState(t, r, Side.COPS))
        if before is None:
            raise StrategyError(f"reachable state cops {t} robber {r} is not a cop win")
        t2 = table.move(t, r)
        after = table.rank(GameState(t2, r, Side.ROBBER))
        if after is None or after >= before:
            raise StrategyError(f"rank did not decrease on cops {t} -> {t2} (robber {r})")
        depth = 1
        if not is_cop_win(g, variant, t2, r):
            replies = legal_robber_moves(g, t2, r)
            if not replies:
                raise StrategyError(f"robber stuck but not beaten: cops {t2} robber {r}")
            for r2 in replies:
                nxt = table.rank(GameState(t2, r2, Side.COPS))
                if nxt is None or nxt >= before:
                    raise StrategyError(f"reply {r2} to cops {t2} does not lower the rank below {before}")
                sub = visit(t2, r2)
                if key not in best_reply or 1 + sub > depth:
                    depth = 1 + sub
                    best_reply[key] = r2
        longest[key] = depth
        return depth

    placements = legal_placements(g, t0)
    if not placements:
        tr.outcome = _win_word(variant)
        return tr
    worst_r, worst = placements[0], -1
    for r in placements:
        dep = visit(t0, r)
        if dep > worst:
            worst_r, worst = r, dep
    if worst > table.initial_rank:
        raise StrategyError(f"a line lasts {worst} rounds, above the bound {table.initial_rank}")
    tr.states_checked = len(longest)
    # replay one longest line
    t, r = t0, worst_r
    tr.rounds.append(Round(0, t, r, Side.ROBBER))
    while not is_cop_win(g, variant, t, r):
        t2 = table.move(t, r)
        tr.cop_rounds += 1
        tr.rounds.append(Round(tr.cop_rounds, t2, r, Side.COPS))
        if is_cop_win(g, variant, t2, r):
            break
        r = best_reply[(t, r)]
        tr.rounds.append(Round(tr.cop_rounds, t2, r, Side.ROBBER))
        t = t2
    tr.outcome = _win_word(variant)
    return tr
