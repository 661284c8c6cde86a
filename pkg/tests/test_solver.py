from itertools import permutations

import pytest

from surround.errors import BudgetExceeded
from surround.families import builtin, complete, cycle, generalized_petersen, path, star, wheel
from surround.graph import DisconnectedGraphError, build_graph
from surround.solver import robber_wins
from surround.solver.configs import (
    MoveDAG,
    Variant,
    config_count,
    config_successors,
    enumerate_configs,
    surroundable_in_one,
)
from surround.solver.psi import check_properties, init_psi, refine_to_fixpoint
from surround.solver.search import cop_number, game_number, surrounding_cop_number


def test_config_enumeration_is_canonical():
    cfgs = enumerate_configs(4, 3)
    assert len(cfgs) == config_count(4, 3) == 20
    assert cfgs == sorted(cfgs) and all(list(t) == sorted(t) for t in cfgs)


def test_successor_examples():
    assert config_successors(path(3), (0, 0)) == {(0, 0), (0, 1), (1, 1)}
    g = cycle(6)
    assert config_successors(g, (2,)) == {(1,), (2,), (3,)}
    k3 = complete(3)
    assert config_successors(k3, (0, 1)) == set(enumerate_configs(3, 2))


def brute_successors(g, t):
    out = set()
    closed = [sorted(g.closed_neighbors(v)) for v in range(g.order)]

    def rec(i, acc):
        if i == len(t):
            out.add(tuple(sorted(acc)))
            return
        for u in closed[t[i]]:
            rec(i + 1, acc + [u])

    rec(0, [])
    return out


@pytest.mark.parametrize("g", [builtin("petersen"), wheel(6), builtin("c8_chords")])
def test_successors_and_dag_agree_with_brute_force(g):
    cfgs = enumerate_configs(g.order, 3)
    index = {t: i for i, t in enumerate(cfgs)}
    dag = MoveDAG(g, cfgs, index)
    # OR-folding one-hot leaves recovers each successor set
    leaves = [1 << i for i in range(len(cfgs))]
    roots = dag.fold_or(leaves)
    for i, t in enumerate(cfgs[:60]):
        expected = brute_successors(g, t)
        assert config_successors(g, t) == expected
        assert roots[i] == sum(1 << index[s] for s in expected)


def brute_surroundable(g, t, v):
    targets = sorted(g.adj[v])
    if len(targets) > len(t):
        return False
    for perm in permutations(range(len(t)), len(targets)):
        if all(targets[j] in g.closed_neighbors(t[perm[j]]) for j in range(len(targets))):
            return True
    return False


def test_surroundable_examples():
    s = star(4)
    assert surroundable_in_one(s, (0,), 1)
    assert not surroundable_in_one(s, (1,), 0)
    assert surroundable_in_one(cycle(4), (1, 3), 0)


@pytest.mark.parametrize("g", [builtin("petersen"), wheel(7), builtin("figure1")])
def test_surroundable_matches_brute_force(g):
    for t in enumerate_configs(g.order, 3)[::7]:
        for v in range(g.order):
            assert surroundable_in_one(g, t, v) == brute_surroundable(g, t, v)


def test_init_psi_examples():
    c4 = cycle(4)
    assert init_psi(c4, 1)[(0,)] == {1, 2, 3}
    assert init_psi(build_graph(1, []), 1)[(0,)] == frozenset()
    assert init_psi(c4, 1, "capture")[(0,)] == {2}


def test_init_rejects_bad_input():
    with pytest.raises(DisconnectedGraphError):
        init_psi(build_graph(3, [(0, 1)]), 1)
    with pytest.raises(ValueError):
        init_psi(path(3), 0)
    with pytest.raises(BudgetExceeded) as exc:
        init_psi(generalized_petersen(10, 3), 5, budget=100)
    assert exc.value.required == config_count(20, 5)


def test_refine_examples():
    fixed = refine_to_fixpoint(cycle(4), init_psi(cycle(4), 1), mode="faithful")
    assert fixed.nonempty_everywhere()
    fixed = refine_to_fixpoint(cycle(4), init_psi(cycle(4), 2))
    assert all(p == 0 for p in fixed.psi)
    fixed = refine_to_fixpoint(path(2), init_psi(path(2), 1))
    assert all(p == 0 for p in fixed.psi)
    with pytest.raises(ValueError):
        refine_to_fixpoint(cycle(4), init_psi(cycle(4), 1), mode="jacobi")


@pytest.mark.parametrize("g", [builtin("petersen"), wheel(6), generalized_petersen(7, 2),
                               builtin("c8_chords"), builtin("figure1")])
@pytest.mark.parametrize("variant", ["surround", "capture"])
def test_fixed_point_properties_and_schedule_independence(g, variant):
    for k in (1, 2, 3):
        start = init_psi(g, k, variant)
        a = refine_to_fixpoint(g, start, mode="worklist")
        b = refine_to_fixpoint(g, start, mode="faithful")
        assert a.psi == b.psi
        check_properties(g, a)
        # refinement only shrinks
        assert all(x & ~y == 0 for x, y in zip(a.psi, start.psi))
        # on a connected graph one empty set forces all empty
        assert a.empty_anywhere() == (not any(a.psi))


def test_robber_wins_examples():
    c3 = cycle(3)
    assert robber_wins(c3, 1) and not robber_wins(c3, 2)
    p = generalized_petersen(5, 2)
    assert robber_wins(p, 2) and not robber_wins(p, 3)
    assert not robber_wins(star(5), 1)
    assert robber_wins(cycle(4), 1) and not robber_wins(cycle(4), 2)
    assert not robber_wins(complete(4), 3)


def test_modes_give_same_verdict():
    g = builtin("figure1")
    for k in (2, 3):
        assert robber_wins(g, k, mode="worklist") == robber_wins(g, k, mode="faithful")


def test_game_number_examples():
    assert surrounding_cop_number(path(4)) == 2
    assert surrounding_cop_number(generalized_petersen(7, 2)) == 4
    assert cop_number(generalized_petersen(7, 2)) == 3


def test_pinned_by_bounds_skips_solver():
    res = game_number(complete(5))
    assert res.pinned_by_bounds and res.number == 4 and res.verdicts == []
    d = res.as_dict()
    assert set(d) == {"variant", "k_tested", "number", "bracket", "pinned_by_bounds", "mode"}


def test_capture_starts_at_one_and_verdicts_recorded():
    res = game_number(generalized_petersen(5, 2), Variant.CAPTURE)
    assert [v.k for v in res.verdicts] == [1, 2, 3]
    assert [v.robber_wins for v in res.verdicts] == [True, True, False]


def test_monotone_in_k():
    g = builtin("c8_chords")
    verdicts = [robber_wins(g, k) for k in range(1, 6)]
    assert verdicts == sorted(verdicts, reverse=True)
