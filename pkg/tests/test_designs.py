from importlib import resources

import pytest

from surround.designs import (
    DesignError,
    block_intersection_graph,
    builtin_design,
    format_design,
    incidence_graph,
    make_design,
    parse_design,
)
from surround.graph import graph_stats


def test_fano_parameters():
    d = builtin_design("fano")
    assert (d.v, d.k, d.lam, d.r, d.b) == (7, 3, 1, 3, 7)


def test_ag23_is_resolvable():
    d = builtin_design("ag23")
    assert (d.v, d.k, d.lam, d.r, d.b) == (9, 3, 1, 4, 12)
    assert d.resolution is not None and len(d.resolution) == 4


def test_incidence_graph_of_fano():
    g = incidence_graph(builtin_design("fano"))
    s = graph_stats(g)
    assert (s.order, s.edge_count) == (14, 21) and s.regular and s.min_degree == 3
    assert g.label(0) == "p0" and g.label(7).startswith("B{")


def test_block_intersection_graphs():
    big_fano = block_intersection_graph(builtin_design("fano"))
    assert big_fano.edge_count == 21 and big_fano.order == 7      # K_7
    big_ag = block_intersection_graph(builtin_design("ag23"))
    s = graph_stats(big_ag)
    assert s.order == 12 and s.regular and s.min_degree == 9


def test_format_parse_round_trip():
    for name in ("fano", "ag23"):
        d = builtin_design(name)
        again = parse_design(format_design(d))
        assert again.blocks == d.blocks and again.r == d.r


def test_bundled_design_files_parse():
    for name in ("fano", "ag23"):
        text = resources.files("surround.data").joinpath(f"{name}.design").read_text()
        assert parse_design(text).blocks == builtin_design(name).blocks


def test_pair_coverage_error_names_pair():
    blocks = [(0, 1, 2), (0, 1, 3), (0, 4, 5), (1, 4, 6), (2, 3, 4), (2, 5, 6), (3, 5, 6)]
    with pytest.raises(DesignError, match=r"pair \{0,1\} covered 2 times"):
        make_design(7, 3, 1, blocks)


@pytest.mark.parametrize("v,k,lam,blocks", [
    (3, 3, 1, [(0, 1, 2)]),          # v must exceed k
    (7, 3, 0, []),                   # lambda >= 1
    (8, 3, 1, []),                   # r not integral
    (7, 3, 1, [(0, 1)]),             # wrong block size
    (7, 3, 1, [(0, 0, 1)]),          # repeated point
    (7, 3, 1, [(0, 1, 9)]),          # point out of range
])
def test_invalid_designs(v, k, lam, blocks):
    with pytest.raises(DesignError):
        make_design(v, k, lam, blocks)


def test_bad_resolution():
    d = builtin_design("ag23")
    with pytest.raises(DesignError):
        make_design(9, 3, 1, d.blocks, [(0, 1, 3), (2, 4, 5), (6, 7, 8), (9, 10, 11)])


def test_parse_errors():
    for text in ("", "7 3\n0 1 2\n", "7 3 1\n0 1 x\n"):
        with pytest.raises(DesignError):
            parse_design(text)
    with pytest.raises(DesignError):
        builtin_design("steiner")
