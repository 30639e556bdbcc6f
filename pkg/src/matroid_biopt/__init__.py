"""Biobjective matroid optimization with one binary objective.

The swap algorithm computes the full non-dominated set and one efficient basis
per non-dominated point; the :mod:`matroid_biopt.oracles` package holds the
brute-force references it is checked against.
"""
from .core import (
    BicriteriaInstance,
    CostPair,
    Matroid,
    MatroidMinor,
    OutcomeVector,
    Sense,
    canonical,
    fundamental_circuit,
)
from .errors import (
    EnumerationBudgetExceeded,
    InfeasibleInstanceError,
    InputError,
    InvariantViolation,
    MatroidError,
    ParseError,
    PreconditionError,
)
from .esa import FrontPoint, ParetoFront, Swap, SwapSequence, run_esa, sort_swaps, ssg
from .greedy import BasisPair, lex_basis_bc_repaired, lex_basis_cb, min_weight_basis
from .matroids import GraphicMatroid, PartitionMatroid, UniformMatroid

__version__ = "0.1.0"

__all__ = [
    "BicriteriaInstance", "CostPair", "Matroid", "MatroidMinor", "OutcomeVector", "Sense",
    "canonical", "fundamental_circuit",
    "EnumerationBudgetExceeded", "InfeasibleInstanceError", "InputError", "InvariantViolation",
    "MatroidError", "ParseError", "PreconditionError",
    "FrontPoint", "ParetoFront", "Swap", "SwapSequence", "run_esa", "sort_swaps", "ssg",
    "BasisPair", "lex_basis_bc_repaired", "lex_basis_cb", "min_weight_basis",
    "GraphicMatroid", "PartitionMatroid", "UniformMatroid",
]
