"""Deciding Surrounding (and classic) Cops and Robbers games."""
from .configs import (
    DEFAULT_CONFIG_BUDGET,
    CopConfig,
    MoveDAG,
    Variant,
    canonical,
    config_count,
    config_successors,
    enumerate_configs,
    occupied_mask,
    surroundable_in_one,
)
from .psi import MODES, PsiMap, check_properties, init_psi, refine_to_fixpoint
from .search import GameResult, KVerdict, cop_number, game_number, robber_wins, surrounding_cop_number

__all__ = [
    "DEFAULT_CONFIG_BUDGET", "CopConfig", "MoveDAG", "Variant", "canonical", "config_count",
    "config_successors", "enumerate_configs", "occupied_mask", "surroundable_in_one",
    "MODES", "PsiMap", "check_properties", "init_psi", "refine_to_fixpoint",
    "GameResult", "KVerdict", "cop_number", "game_number", "robber_wins", "surrounding_cop_number",
]
