import random

import pytest

from surround.errors import BudgetExceeded, StrategyError
from surround.families import builtin, complete, cycle, generalized_petersen, path, star
from surround.graph import build_graph
from surround.solver import robber_wins
from surround.solver.configs import config_successors
from surround.solver.psi import init_psi, refine_to_fixpoint
from surround.strategy import (
    GameState,
    Side,
    is_cop_win,
    legal_robber_moves,
    robber_policy,
    simulate,
    solve_positions,
    verify_robber_policy,
)


def fixed_psi(g, k, variant="surround"):
    return refine_to_fixpoint(g, init_psi(g, k, variant))


def test_path4_two_cops():
    g = path(4)
    table = solve_positions(g, 2)
    assert table is not None
    t0 = table.initial
    for r in range(g.order):
        if r not in t0:
            assert table.rank(GameState(t0, r, Side.COPS)) is not None
    tr = simulate(g, table, "exhaustive")
    assert tr.outcome == "surrounded" and tr.cop_rounds <= table.initial_rank


def test_verdicts():
    assert solve_positions(cycle(4), 1) is None
    assert solve_positions(complete(3), 2) is not None


def test_complete5_four_cops_fast():
    g = complete(5)
    table = solve_positions(g, 4)
    tr = simulate(g, table, "exhaustive")
    assert tr.outcome == "surrounded" and tr.cop_rounds <= 2 and table.initial_rank <= 2


def test_petersen_three_cops_exhaustive():
    g = generalized_petersen(5, 2)
    table = solve_positions(g, 3)
    tr = simulate(g, table, "exhaustive")
    assert tr.outcome == "surrounded" and tr.states_checked > 0


@pytest.mark.parametrize("g", [path(5), cycle(6), builtin("petersen"), builtin("c8_chords"), star(5)])
@pytest.mark.parametrize("variant", ["surround", "capture"])
def test_verdict_agreement(g, variant):
    for k in (1, 2, 3):
        assert (solve_positions(g, k, variant) is None) == robber_wins(g, k, variant)


def test_forced_move_rule():
    g = path(3)
    # robber on the occupied middle vertex has to leave
    assert legal_robber_moves(g, (1,), 1) == [0, 2]
    assert legal_robber_moves(g, (0,), 1) == [1, 2]
    assert is_cop_win(g, "surround", (0, 2), 1)
    assert not is_cop_win(g, "capture", (0, 2), 1)


class RandomCops:
    def __init__(self, g, seed):
        self.g, self.rng = g, random.Random(seed)

    def move(self, t):
        return self.rng.choice(sorted(config_successors(self.g, t)))


def test_robber_policy_c4_and_random_c5():
    g = cycle(4)
    policy = robber_policy(fixed_psi(g, 1))
    assert policy.place((0,)) in {1, 2, 3}
    assert verify_robber_policy(g, policy, 1) > 0

    g = cycle(5)
    policy = robber_policy(fixed_psi(g, 1))
    cops = RandomCops(g, 11)
    t = (0,)
    r = policy.place(t)
    for _ in range(1000):
        t = cops.move(t)
        assert not is_cop_win(g, "surround", t, r)
        r = policy.respond(t, r)
        assert not is_cop_win(g, "surround", t, r)


def test_robber_policy_rejected_when_cops_win():
    with pytest.raises(ValueError):
        robber_policy(fixed_psi(star(4), 1))


@pytest.mark.parametrize("g,k,variant", [(builtin("petersen"), 2, "surround"),
                                         (builtin("figure1"), 2, "surround"),
                                         (builtin("petersen"), 2, "capture"),
                                         (cycle(7), 1, "capture")])
def test_policy_survives_exhaustive_cop_play(g, k, variant):
    policy = robber_policy(fixed_psi(g, k, variant))
    assert verify_robber_policy(g, policy, k, variant) > 0


class StayingRobber:
    """Never moves unless forced; only sensible for checking the simulator."""

    def __init__(self, g):
        self.g = g

    def place(self, t):
        return max(v for v in range(self.g.order) if v not in t)

    def respond(self, t, r):
        moves = legal_robber_moves(self.g, t, r)
        return r if r in moves else moves[0]


def test_simulate_against_agent_records_rounds():
    g = builtin("figure1")
    table = solve_positions(g, 3)
    tr = simulate(g, table, StayingRobber(g))
    assert tr.outcome == "surrounded"
    assert tr.cop_rounds <= table.initial_rank
    recs = tr.to_records()
    assert recs[0]["mover"] == "robber" and recs[0]["round"] == 0
    lines = tr.to_lines(g)
    assert lines[-1].startswith("outcome: surrounded")


def test_simulate_rejects_illegal_robber():
    class Cheater(StayingRobber):
        def respond(self, t, r):
            return t[0]

    g = builtin("figure1")
    table = solve_positions(g, 3)
    with pytest.raises(StrategyError, match="illegal robber move"):
        simulate(g, table, Cheater(g))


def test_corrupted_table_is_caught():
    g = builtin("figure1")
    table = solve_positions(g, 3)
    assert table.initial_rank > 1
    # point every stored move back at its own configuration: ranks stop decreasing
    n = g.order
    for sid, j in enumerate(table.cop_move):
        if j >= 0:
            table.cop_move[sid] = sid // n
    with pytest.raises(StrategyError, match="rank did not decrease"):
        simulate(g, table, "exhaustive")


def test_single_vertex_graph():
    g = build_graph(1, [])
    table = solve_positions(g, 1)
    tr = simulate(g, table, "exhaustive")
    assert table.initial_rank == 0 and tr.outcome == "surrounded" and tr.cop_rounds == 0


def test_state_budget():
    with pytest.raises(BudgetExceeded):
        solve_positions(generalized_petersen(7, 2), 3, budget=1000)


def test_tie_break_is_deterministic():
    g = builtin("c8_chords")
    a, b = solve_positions(g, 3), solve_positions(g, 3)
    assert a.cop_move == b.cop_move and a.initial == b.initial
