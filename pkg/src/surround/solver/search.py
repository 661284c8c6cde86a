"""Deciding ``k``-cop games and searching for the surrounding / cop number."""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field

from ..bounds import bound_report
from ..graph import Graph, require_connected
from .configs import DEFAULT_CONFIG_BUDGET, Variant
from .psi import init_psi, refine_to_fixpoint

log = logging.getLogger(__name__)


def robber_wins(g: Graph, k: int, variant: Variant | str = Variant.SURROUND,
                mode: str = "worklist", budget: int = DEFAULT_CONFIG_BUDGET) -> bool:
    """True iff the robber evades ``k`` cops forever (i.e. the number exceeds ``k``)."""
    psi = init_psi(g, k, variant, budget)
    fixed = refine_to_fixpoint(g, psi, mode=mode, stop_on_empty=(mode == "worklist"))
    return fixed.nonempty_everywhere()


@dataclass(frozen=True)
class KVerdict:
    k: int
    robber_wins: bool
    seconds: float


@dataclass
class GameResult:
    number: int
    variant: Variant
    lo: int
    hi: int
    pinned_by_bounds: bool
    mode: str
    verdicts: list[KVerdict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "k_tested": [asdict(v) for v in self.verdicts],
            "number": self.number,
            "bracket": {"lo": self.lo, "hi": self.hi},
            "pinned_by_bounds": self.pinned_by_bounds,
            "mode": self.mode,
        }


def game_number(g: Graph, variant: Variant | str = Variant.SURROUND, mode: str = "worklist",
                budget: int = DEFAULT_CONFIG_BUDGET) -> GameResult:
    """Least ``k`` for which the cops win.

    The surrounding cop number is searched upwards from the lower end of
    the bound bracket and skipped entirely when the bracket is a single
    value.  The cop number is searched from 1; it never exceeds the
    surrounding cop number, so the same upper end applies.
    """
    variant = Variant(variant)
    require_connected(g)
    report = bound_report(g)
    lo, hi = report.lo, report.hi
    if variant is Variant.SURROUND and lo == hi:
        return GameResult(lo, variant, lo, hi, True, mode)
    start = lo if variant is Variant.SURROUND else 1
    verdicts = []
    for k in range(start, hi + 1):
        t0 = time.perf_counter()
        wins = robber_wins(g, k, variant, mode, budget)
        verdicts.append(KVerdict(k, wins, time.perf_counter() - t0))
        log.debug("k=%d robber_wins=%s (%.3fs)", k, wins, verdicts[-1].seconds)
        if not wins:
            break
    else:
        raise AssertionError(f"robber wins against {hi} cops, contradicting the upper bound {hi}")
    result = GameResult(verdicts[-1].k, variant, lo, hi, False, mode, verdicts)
    if variant is Variant.SURROUND and not lo <= result.number <= hi:
        raise AssertionError(f"solver answer {result.number} outside bracket [{lo}, {hi}]")
    return result


def surrounding_cop_number(g: Graph, **kwargs) -> int:
    return game_number(g, Variant.SURROUND, **kwargs).number


def cop_number(g: Graph, **kwargs) -> int:
    return game_number(g, Variant.CAPTURE, **kwargs).number
