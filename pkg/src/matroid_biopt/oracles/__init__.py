"""Independent reference algorithms used to validate the swap algorithm."""
from .adjacency import AdjacencyGraph, adjacency_connected, adjacency_graph
from .dp import DpResult, UniformDP, dp_uniform, dp_uniform_all_k
from .enumeration import (
    DEFAULT_MAX_ENUMERATION,
    EnumerationResult,
    complete_enumeration,
    enumerate_bases,
)
from .hull import Support, classify_supported
from .kirchhoff import bareiss_determinant, count_bases
from .naive import SwapStep, efficient_suffix, naive_minimal_swap_solver
from .pareto import EfficientSet, pareto_filter

__all__ = [
    "AdjacencyGraph", "adjacency_connected", "adjacency_graph",
    "DpResult", "UniformDP", "dp_uniform", "dp_uniform_all_k",
    "DEFAULT_MAX_ENUMERATION", "EnumerationResult", "complete_enumeration", "enumerate_bases",
    "Support", "classify_supported",
    "bareiss_determinant", "count_bases",
    "SwapStep", "efficient_suffix", "naive_minimal_swap_solver",
    "EfficientSet", "pareto_filter",
]
