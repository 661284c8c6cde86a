"""Sweeps over generalised Petersen graphs ``GP(n, k)``, ``1 <= k < n/2``."""
from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import BudgetExceeded
from .families import generalized_petersen
from .solver.configs import DEFAULT_CONFIG_BUDGET, Variant
from .solver.search import game_number

log = logging.getLogger(__name__)

COLUMNS = ("n", "k", "number", "seconds", "status")
_TABLE_FILES = {Variant.SURROUND: "gp_surround.csv", Variant.CAPTURE: "gp_capture.csv"}


@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    number: int | None
    seconds: float | None
    status: str = "ok"

    def as_csv(self, timings: bool = True) -> list[str]:
        secs = "" if self.seconds is None or not timings else f"{self.seconds:.3f}"
        num = "" if self.number is None else str(self.number)
        return [str(self.n), str(self.k), num, secs, self.status]


def gp_cells(nmax: int, kmax: int | None = None, nmin: int = 3) -> list[tuple[int, int]]:
    cells = []
    for n in range(nmin, nmax + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if kmax is None or k <= kmax:
                cells.append((n, k))
    return cells


def solve_cell(cell: tuple[int, int], variant: str = "surround", mode: str = "worklist",
               budget: int = DEFAULT_CONFIG_BUDGET) -> SweepRow:
    """Solve one cell; failures become a row with a non-``ok`` status."""
    n, k = cell
    t0 = time.perf_counter()
    try:
        number = game_number(generalized_petersen(n, k), variant, mode, budget).number
    except BudgetExceeded as exc:
        return SweepRow(n, k, None, time.perf_counter() - t0, f"budget: {exc}")
    except Exception as exc:  # noqa: BLE001 - one bad cell must not abort a sweep
        return SweepRow(n, k, None, time.perf_counter() - t0, f"error: {type(exc).__name__}: {exc}")
    return SweepRow(n, k, number, time.perf_counter() - t0)


def _solve_star(args: tuple) -> SweepRow:
    return solve_cell(*args)


def run_sweep(nmax: int, variant: Variant | str = Variant.SURROUND, *, kmax: int | None = None,
              nmin: int = 3, workers: int = 1, mode: str = "worklist",
              budget: int = DEFAULT_CONFIG_BUDGET,
              existing: Iterable[SweepRow] = ()) -> list[SweepRow]:
    """All rows for the requested range, in ``(n, k)`` order.

    Cells already present with status ``ok`` in ``existing`` are reused
    rather than recomputed.
    """
    variant = Variant(variant)
    done = {(r.n, r.k): r for r in existing if r.status == "ok"}
    cells = gp_cells(nmax, kmax, nmin)
    todo = [c for c in cells if c not in done]
    jobs = [(c, variant.value, mode, budget) for c in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_solve_star, jobs))
    else:
        fresh = [_solve_star(j) for j in jobs]
    for row in fresh:
        log.info("GP(%d,%d): %s %s", row.n, row.k, row.number, row.status)
        done[(row.n, row.k)] = row
    return [done[c] for c in cells]


def format_rows(rows: Iterable[SweepRow], timings: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow(r.as_csv(timings))
    return buf.getvalue()


def _row_from_record(rec: dict) -> SweepRow | None:
    """Accept either a sweep row object or a CLI result record for a GP graph."""
    if "n" in rec and "k" in rec:
        return SweepRow(int(rec["n"]), int(rec["k"]),
                        None if rec.get("number") is None else int(rec["number"]),
                        rec.get("seconds"), rec.get("status", "ok"))
    graph = rec.get("graph") or {}
    tokens = str(graph.get("value", "")).split()
    if graph.get("source") == "family" and len(tokens) == 3 and tokens[0] == "gp":
        return SweepRow(int(tokens[1]), int(tokens[2]), int(rec["number"]), rec.get("seconds"))
    return None


def parse_rows(text: str) -> list[SweepRow]:
    """Rows from sweep CSV output or from JSON lines (sweep rows or result records)."""
    stripped = text.lstrip()
    if not stripped:
        return []
    rows = []
    if stripped.startswith("{"):
        for line in stripped.splitlines():
            if line.strip():
                row = _row_from_record(json.loads(line))
                if row is not None:
                    rows.append(row)
        return rows
    for rec in csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#")):
        secs = rec.get("seconds") or None
        num = rec.get("number") or None
        rows.append(SweepRow(int(rec["n"]), int(rec["k"]), None if num is None else int(num),
                             None if secs is None else float(secs), rec.get("status") or "ok"))
    return rows


def load_rows(path: str | Path) -> list[SweepRow]:
    p = Path(path)
    return parse_rows(p.read_text()) if p.exists() else []


def bundled_table(variant: Variant | str) -> dict[tuple[int, int], int]:
    """Reference values for ``GP(n, k)`` shipped with the package."""
    name = _TABLE_FILES[Variant(variant)]
    text = resources.files("surround.data").joinpath(name).read_text()
    return {(r.n, r.k): r.number for r in parse_rows(text)}


def compare(rows: Iterable[SweepRow], variant: Variant | str) -> list[tuple[int, int, int | None, int]]:
    """``(n, k, got, expected)`` for every row that disagrees with the bundled table."""
    table = bundled_table(variant)
    out = []
    for r in rows:
        want = table.get((r.n, r.k))
        if want is not None and r.number != want:
            out.append((r.n, r.k, r.number, want))
    return out
