"""JSON result records shared by the CLI and the sweep resume logic."""
from __future__ import annotations

import hashlib
import json

from .graph import Graph, write_graph6
from .solver.search import GameResult


def graph_descriptor(g: Graph, source: str, value: str) -> dict:
    """Where a graph came from plus a digest of its graph6 encoding."""
    g6 = write_graph6(g)
    return {
        "source": source,
        "value": value,
        "order": g.order,
        "edges": g.edge_count,
        "sha256": hashlib.sha256(g6.encode()).hexdigest(),
    }


def result_record(descriptor: dict, result: GameResult, seconds: float) -> dict:
    rec = {"graph": descriptor}
    rec.update(result.as_dict())
    rec["seconds"] = round(seconds, 6)
    return rec


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)
