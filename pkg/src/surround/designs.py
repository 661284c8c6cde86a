"""Balanced incomplete block designs and the graphs derived from them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, build_graph


class DesignError(ValueError):
    """Raised when text or block data does not describe a valid BIBD."""


@dataclass(frozen=True)
class Design:
    v: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]
    r: int
    resolution: tuple[tuple[int, ...], ...] | None = None

    @property
    def b(self) -> int:
        return len(self.blocks)


def make_design(v: int, k: int, lam: int, blocks: Sequence[Sequence[int]],
                resolution: Sequence[Sequence[int]] | None = None) -> Design:
    """Validate block data and return a :class:`Design`.

    Checks block sizes, pair coverage (every pair in exactly ``lam``
    blocks) and the replication number ``lam*(v-1)/(k-1)``.
    """
    if not (v > k >= 2):
        raise DesignError(f"a BIBD needs v > k >= 2, got v={v}, k={k}")
    if lam < 1:
        raise DesignError(f"lambda must be >= 1, got {lam}")
    if (lam * (v - 1)) % (k - 1):
        raise DesignError(f"replication number {lam}*({v}-1)/({k}-1) is not an integer")
    r = lam * (v - 1) // (k - 1)
    canon = []
    for i, blk in enumerate(blocks):
        pts = tuple(sorted(blk))
        if len(pts) != k:
            raise DesignError(f"block {i} has {len(pts)} points, expected {k}")
        if len(set(pts)) != k:
            raise DesignError(f"block {i} repeats a point: {list(blk)}")
        if pts[0] < 0 or pts[-1] >= v:
            raise DesignError(f"block {i} has a point outside 0..{v - 1}")
        canon.append(pts)
    cover: dict[tuple[int, int], int] = {}
    for pts in canon:
        for pair in combinations(pts, 2):
            cover[pair] = cover.get(pair, 0) + 1
    for pair in combinations(range(v), 2):
        c = cover.get(pair, 0)
        if c != lam:
            raise DesignError(f"pair {{{pair[0]},{pair[1]}}} covered {c} times, expected {lam}")
    for x in range(v):
        rx = sum(x in pts for pts in canon)
        if rx != r:
            raise DesignError(f"point {x} lies in {rx} blocks, expected r={r}")
    res = None
    if resolution is not None:
        res = tuple(tuple(cls) for cls in resolution)
        check_resolution(v, canon, res)
    return Design(v, k, lam, tuple(canon), r, res)


def check_resolution(v: int, blocks: Sequence[Sequence[int]],
                     classes: Sequence[Sequence[int]]) -> None:
    """Raise unless ``classes`` partitions the blocks into parallel classes."""
    used = sorted(i for cls in classes for i in cls)
    if used != list(range(len(blocks))):
        raise DesignError("resolution does not partition the blocks")
    for n, cls in enumerate(classes):
        pts = sorted(p for i in cls for p in blocks[i])
        if pts != list(range(v)):
            raise DesignError(f"parallel class {n} does not cover every point exactly once")


def parse_design(text: str) -> Design:
    """Parse ``v k lambda`` followed by one block per line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise DesignError(f"line {lineno}: non-integer token in {raw.strip()!r}") from None
    if not rows:
        raise DesignError("empty design text")
    if len(rows[0]) != 3:
        raise DesignError("first line must be 'v k lambda'")
    v, k, lam = rows[0]
    return make_design(v, k, lam, rows[1:])


def format_design(d: Design) -> str:
    lines = [f"{d.v} {d.k} {d.lam}"]
    lines.extend(" ".join(map(str, blk)) for blk in d.blocks)
    return "\n".join(lines) + "\n"


_FANO = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]


def _ag23() -> Design:
    # AG(2,3): point (x, y) is 3x + y; lines grouped by slope so class i is blocks 3i..3i+2
    blocks = []
    for c in range(3):
        blocks.append([3 * x + c for x in range(3)])          # y = c
    for c in range(3):
        blocks.append([3 * c + y for y in range(3)])          # x = c
    for slope in (1, 2):
        for c in range(3):
            blocks.append([3 * x + (slope * x + c) % 3 for x in range(3)])
    classes = [tuple(range(3 * i, 3 * i + 3)) for i in range(4)]
    return make_design(9, 3, 1, blocks, classes)


def builtin_design(name: str) -> Design:
    if name == "fano":
        return make_design(7, 3, 1, _FANO)
    if name == "ag23":
        return _ag23()
    raise DesignError(f"unknown builtin design {name!r}; expected 'fano' or 'ag23'")


def incidence_graph(d: Design) -> Graph:
    """Points ``0..v-1`` then blocks ``v..v+b-1``; point ``x`` ~ block ``B`` iff ``x in B``."""
    edges = [(x, d.v + i) for i, blk in enumerate(d.blocks) for x in blk]
    labels = [f"p{x}" for x in range(d.v)]
    labels += ["B{" + ",".join(map(str, blk)) + "}" for blk in d.blocks]
    return build_graph(d.v + d.b, edges, labels)


def block_intersection_graph(d: Design) -> Graph:
    sets = [frozenset(blk) for blk in d.blocks]
    edges = [(i, j) for i, j in combinations(range(d.b), 2) if sets[i] & sets[j]]
    labels = ["{" + ",".join(map(str, blk)) + "}" for blk in d.blocks]
    return build_graph(d.b, edges, labels)
