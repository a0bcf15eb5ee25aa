"""Explicit separating path systems for the supported graph families."""

from sepsys.constructions.basic import complete_system, gray_facet_path, hypercube_system, interval_system
from sepsys.constructions.biclique import BicliquePlan, biclique_plan, biclique_system
from sepsys.constructions.fan import fan_paths, fan_system
from sepsys.constructions.grid import axis_paths, band_path, grid_system, position_classes
from sepsys.constructions.outerplanar import (
    EAR_STRIP_MIN,
    Fan,
    FanDecomposition,
    PIECE_EXCESS,
    RECORDED_EXCESS,
    fan_decompose,
    inner2_system,
    outerplanar_system,
    path_pieces,
)
from sepsys.constructions.tight_tree import tight_tree_system, tree_path

__all__ = [
    "EAR_STRIP_MIN",
    "PIECE_EXCESS",
    "RECORDED_EXCESS",
    "BicliquePlan",
    "Fan",
    "FanDecomposition",
    "axis_paths",
    "band_path",
    "biclique_plan",
    "biclique_system",
    "complete_system",
    "fan_decompose",
    "fan_paths",
    "fan_system",
    "gray_facet_path",
    "grid_system",
    "hypercube_system",
    "inner2_system",
    "interval_system",
    "outerplanar_system",
    "path_pieces",
    "position_classes",
    "tight_tree_system",
    "tree_path",
]
