"""Exact solver and strategy certificates for Surrounding Cops and Robbers."""
from .graph import Graph, GraphError, build_graph, graph_stats, parse_edge_list, parse_graph6, write_graph6
from .solver import Variant, game_number, robber_wins

__version__ = "0.1.0"

__all__ = ["Graph", "GraphError", "build_graph", "graph_stats", "parse_edge_list", "parse_graph6",
           "write_graph6", "Variant", "game_number", "robber_wins"]
