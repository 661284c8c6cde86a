import networkx as nx
import pytest

from surround.families import (
    FamilySpec,
    builtin,
    complete,
    complete_bipartite,
    cycle,
    generalized_petersen,
    line_graph,
    make_family,
    path,
    product,
    star,
    wheel,
)
from surround.graph import GraphError, girth, graph_stats


def nxg(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def degrees(g):
    return sorted(g.degree(v) for v in range(g.order))


def test_petersen_is_gp52():
    g = make_family(FamilySpec("gp", (5, 2)))
    assert g.order == 10 and degrees(g) == [3] * 10
    assert nx.is_isomorphic(nxg(g), nx.petersen_graph())
    assert g == builtin("petersen")


@pytest.mark.parametrize("n,k", [(3, 1), (7, 2), (7, 3), (12, 5), (20, 9)])
def test_gp_shape(n, k):
    g = generalized_petersen(n, k)
    assert g.order == 2 * n and g.edge_count == 3 * n
    assert degrees(g) == [3] * (2 * n)
    assert g.has_edge(0, n) and g.has_edge(n, n + k) and g.label(n + 1) == "b_1"


@pytest.mark.parametrize("n,k", [(4, 2), (2, 1), (5, 0)])
def test_gp_rejects_bad_parameters(n, k):
    with pytest.raises(GraphError, match="n > 2k"):
        generalized_petersen(n, k)


def test_star_and_wheel():
    assert degrees(star(4)) == [1, 1, 1, 3]
    w = wheel(6)
    assert w.order == 6 and w.degree(0) == 5 and degrees(w)[:5] == [3] * 5
    assert nx.is_isomorphic(nxg(w), nx.wheel_graph(6))
    with pytest.raises(GraphError):
        wheel(3)


def test_basic_families_match_networkx():
    assert nx.is_isomorphic(nxg(path(5)), nx.path_graph(5))
    assert nx.is_isomorphic(nxg(cycle(6)), nx.cycle_graph(6))
    assert nx.is_isomorphic(nxg(complete(5)), nx.complete_graph(5))
    assert nx.is_isomorphic(nxg(complete_bipartite(2, 3)), nx.complete_bipartite_graph(2, 3))
    with pytest.raises(GraphError):
        cycle(2)


def test_c8_builtins():
    g = builtin("c8_chords")
    h = builtin("c8_chords_plus_e")
    assert (g.order, g.edge_count) == (8, 10)
    assert (h.order, h.edge_count) == (8, 11)
    # 1-based names 2 and 6 are indices 1 and 5
    assert not g.has_edge(1, 5) and h.has_edge(1, 5)
    assert g.has_edge(1, 7) and g.has_edge(3, 5)


def test_figure1_graph():
    s = graph_stats(builtin("figure1"))
    assert s.order == 16 and s.regular and s.min_degree == 3 and s.girth == 6


def test_mcgee():
    g = builtin("mcgee")
    s = graph_stats(g)
    assert s.order == 24 and s.regular and s.min_degree == 3 and s.girth == 7
    assert s.connected


def test_spec_parsing():
    assert FamilySpec.parse(["gp", "7", "2"]) == FamilySpec("gp", (7, 2))
    assert str(FamilySpec.parse(["builtin", "mcgee"])) == "builtin mcgee"
    for bad in (["hexagon", "3"], ["gp", "x", "1"], [], ["builtin"]):
        with pytest.raises(GraphError):
            FamilySpec.parse(bad)
    with pytest.raises(GraphError):
        make_family(FamilySpec("path", (1, 2)))
    with pytest.raises(GraphError):
        builtin("nope")


def test_line_graphs():
    lp3 = line_graph(path(3))
    assert (lp3.order, lp3.edge_count) == (2, 1)
    lk4 = line_graph(complete(4))
    assert lk4.order == 6 and lk4.edge_count == 12 and degrees(lk4) == [4] * 6
    lk5 = line_graph(complete(5))
    assert lk5.order == 10 and degrees(lk5) == [6] * 10
    assert lk5.label(0) == "0-1"
    with pytest.raises(GraphError):
        line_graph(path(1))


def test_products_small_identities():
    p2 = path(2)
    assert nx.is_isomorphic(nxg(product(p2, p2, "cartesian")), nx.cycle_graph(4))
    assert nx.is_isomorphic(nxg(product(p2, p2, "strong")), nx.complete_graph(4))
    lex = product(star(4), star(4), "lexicographic")
    assert min(lex.degree(v) for v in range(lex.order)) == 1 * 4 + 1


@pytest.mark.parametrize("kind,nxfun", [("cartesian", nx.cartesian_product),
                                        ("strong", nx.strong_product),
                                        ("lexicographic", nx.lexicographic_product)])
def test_products_match_networkx(kind, nxfun):
    g, h = path(3), cycle(4)
    ours = product(g, h, kind)
    theirs = nxfun(nx.path_graph(3), nx.cycle_graph(4))
    mapped = {(u, v): u * 4 + v for u, v in theirs.nodes()}
    expected = sorted(tuple(sorted((mapped[a], mapped[b]))) for a, b in theirs.edges())
    assert ours.edges() == expected


def test_product_edge_inclusions():
    g, h = cycle(5), path(3)
    cart = set(product(g, h, "cartesian").edges())
    strong = set(product(g, h, "strong").edges())
    lex = set(product(g, h, "lexicographic").edges())
    assert cart <= strong <= lex


def test_product_rejects_unknown_kind():
    with pytest.raises(GraphError):
        product(path(2), path(2), "tensor")


def test_girth_of_forest_is_infinite():
    assert girth(path(4)) == float("inf")
