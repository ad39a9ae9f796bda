"""Spectral inertia-type bounds on k-independence and distance-k chromatic numbers."""

from . import named
from .graphs import (
    Graph,
    DiagonalProfile,
    parse_graph,
    to_graph6,
    diagonal_profile,
    graph_power,
    is_k_partially_walk_regular,
    load_catalog,
)
from .spectra import Spectrum, DistinctSpectrum, eigenvalues, group_distinct, spectrum_of
from .polynomials import Polynomial
from .alpha import (
    AlphaBoundResult,
    PolynomialProfile,
    evaluate_bound,
    optimize_k1,
    optimize_k2,
    optimize_fixed_k,
    prune_diagonal_constraints,
)
from .chi import (
    ChiBoundResult,
    evaluate_second_bound,
    optimize_second_k1,
    optimize_second_k2,
    optimize_second_fixed_k,
    first_bound,
)
from .oracles import OracleBudget, exact_alpha_k, exact_chi_k, grid_search_bound

__all__ = [
    "Graph",
    "DiagonalProfile",
    "parse_graph",
    "to_graph6",
    "diagonal_profile",
    "graph_power",
    "is_k_partially_walk_regular",
    "load_catalog",
    "Spectrum",
    "DistinctSpectrum",
    "eigenvalues",
    "group_distinct",
    "spectrum_of",
    "Polynomial",
    "AlphaBoundResult",
    "PolynomialProfile",
    "evaluate_bound",
    "optimize_k1",
    "optimize_k2",
    "optimize_fixed_k",
    "prune_diagonal_constraints",
    "ChiBoundResult",
    "evaluate_second_bound",
    "optimize_second_k1",
    "optimize_second_k2",
    "optimize_second_fixed_k",
    "first_bound",
    "OracleBudget",
    "exact_alpha_k",
    "exact_chi_k",
    "grid_search_bound",
    "named",
]

__version__ = "0.1.0"
