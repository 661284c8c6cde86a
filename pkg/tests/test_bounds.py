import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surround.bounds import (
    bound_report,
    bracket,
    elimination_width,
    lower_bounds,
    max_clique,
    max_independent_set,
    upper_bounds,
)
from surround.designs import block_intersection_graph, builtin_design
from surround.families import builtin, complete, cycle, path, star
from surround.graph import DisconnectedGraphError, build_graph, degeneracy


def random_connected(rng, n, p):
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    edges += [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def nxg(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def test_lower_bound_examples():
    assert lower_bounds(complete(5)) == (4, 4, None)
    assert lower_bounds(builtin("petersen")) == (3, 1, None)
    assert lower_bounds(builtin("mcgee")) == (3, 1, 4)


def test_upper_bound_examples():
    assert upper_bounds(star(6)) == (1, 2)
    assert upper_bounds(complete(7)) == (6, 7)
    assert upper_bounds(block_intersection_graph(builtin_design("ag23")))[0] == 9


def test_bracket_examples():
    assert bracket(path(4)) == (1, 2)
    for n in (3, 4, 5):
        assert bracket(complete(n)) == (n - 1, n - 1)
    assert bracket(block_intersection_graph(builtin_design("ag23"))) == (9, 9)


def test_single_vertex_clamped():
    assert bracket(build_graph(1, [])) == (1, 1)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        bound_report(build_graph(3, [(0, 1)]))


def test_width_on_known_treewidths():
    for heuristic in ("min_degree", "min_fill"):
        assert elimination_width(path(7), heuristic)[0] == 1
        assert elimination_width(star(6), heuristic)[0] == 1
        assert elimination_width(cycle(8), heuristic)[0] == 2
        assert elimination_width(complete(6), heuristic)[0] == 5
    with pytest.raises(ValueError):
        elimination_width(path(3), "best")


def test_budget_abort_keeps_a_valid_bound():
    g = random_connected(random.Random(5), 30, 0.5)
    res = max_clique(g, budget=3)
    assert not res.exact
    assert all(g.has_edge(u, v) for i, u in enumerate(res.clique) for v in res.clique[i + 1:])
    rep = bound_report(g, budget=3)
    assert not rep.exact and rep.warnings
    exact = bound_report(g)
    assert rep.lo <= exact.lo and rep.hi >= exact.hi


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 14), st.floats(0, 1), st.integers(0, 10**6))
def test_clique_and_independence_match_networkx(n, p, seed):
    g = random_connected(random.Random(seed), n, p)
    G = nxg(g)
    omega = max(len(c) for c in nx.find_cliques(G))
    alpha = max(len(c) for c in nx.find_cliques(nx.complement(G)))
    c, a = max_clique(g), max_independent_set(g)
    assert c.exact and c.size == omega
    assert a.exact and a.size == alpha
    assert all(not g.has_edge(u, v) for i, u in enumerate(a.clique) for v in a.clique[i + 1:])


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 16), st.floats(0, 1), st.integers(0, 10**6))
def test_report_invariants(n, p, seed):
    g = random_connected(random.Random(seed), n, p)
    rep = bound_report(g)
    assert rep.clique_minus_one <= rep.vertex_cover
    assert 1 <= rep.lo <= rep.hi
    # any elimination ordering's width is at least the degeneracy
    assert rep.elim_width_plus_one - 1 >= degeneracy(g)
    assert set(rep.as_dict()) >= {"delta", "clique_minus_one", "girth_rule", "vertex_cover",
                                  "elim_width_plus_one", "lo", "hi"}


def test_elimination_ordering_is_a_permutation():
    g = builtin("figure1")
    w, order = elimination_width(g)
    assert sorted(order) == list(range(g.order)) and w >= 2
