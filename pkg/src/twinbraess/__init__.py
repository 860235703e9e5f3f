"""Kemeny's constant, resistance distance and the twin-pendant Braess paradox."""

from .braess import (
    BraessReport,
    ParadoxScan,
    is_twin_braess,
    is_v_twin_braess,
    kemeny_delta,
    lambda_v,
    paradox_scan,
)
from .forests import (
    ForestData,
    forest_data,
    resistance_matrix,
    spanning_tree_count,
    two_forest_matrix,
    two_forest_matrix_bruteforce,
)
from .graph import (
    Graph,
    attach_pendant_twins,
    close_twins,
    derived_matrices,
    find_pendant_twins,
    is_connected,
    new_graph,
    non_edges,
)
from .kemeny import (
    estimate_kemeny_monte_carlo,
    kemeny,
    kemeny_combinatorial,
    kemeny_spectral,
    stationary_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "BraessReport",
    "ForestData",
    "Graph",
    "ParadoxScan",
    "attach_pendant_twins",
    "close_twins",
    "derived_matrices",
    "estimate_kemeny_monte_carlo",
    "find_pendant_twins",
    "forest_data",
    "is_connected",
    "is_twin_braess",
    "is_v_twin_braess",
    "kemeny",
    "kemeny_combinatorial",
    "kemeny_delta",
    "kemeny_spectral",
    "lambda_v",
    "new_graph",
    "non_edges",
    "paradox_scan",
    "resistance_matrix",
    "spanning_tree_count",
    "stationary_distribution",
    "two_forest_matrix",
    "two_forest_matrix_bruteforce",
]
