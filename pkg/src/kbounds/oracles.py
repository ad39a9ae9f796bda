"""Brute-force ground truth: exact alpha_k, exact chi_k, and a coefficient
grid search over the bound formula.

These are the independent side of every dual-route check: they share no
code with the optimizers beyond the graph-power constructor.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, CapabilityError
from .graphs import DiagonalProfile, Graph, graph_power
from .kernels import BACKEND, chromatic_number, mis_size
from .polynomials import Polynomial
from .spectra import DistinctSpectrum

__all__ = [
    "OracleBudget",
    "DEFAULT_ALPHA_BUDGET",
    "DEFAULT_CHI_BUDGET",
    "exact_alpha_k",
    "exact_chi_k",
    "grid_search_bound",
]

# coarse search-tree rate used to translate a time budget into a node cap
_NODES_PER_SECOND = 5_000_000 if BACKEND == "compiled" else 200_000


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 30
    max_seconds: float = 60.0
    note: str = ""

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_ALPHA_BUDGET = OracleBudget(max_vertices=30)
DEFAULT_CHI_BUDGET = OracleBudget(max_vertices=20)


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _guard(g: Graph, budget: OracleBudget, what: str) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceededError(
            f"{what}: graph has {g.n} vertices, budget allows {budget.max_vertices}"
        )
    if g.n > 63:
        raise BudgetExceededError(f"{what}: kernels support at most 63 vertices")


def exact_alpha_k(g: Graph, k: int, budget: OracleBudget = DEFAULT_ALPHA_BUDGET) -> int:
    """alpha_k(g) = maximum independent set of g^k, exactly."""
    _guard(g, budget, "exact_alpha_k")
    gp = graph_power(g, k)
    cap = int(budget.max_seconds * _NODES_PER_SECOND)
    try:
        return int(mis_size(_neighbor_masks(gp), gp.n, max_nodes=cap))
    except RuntimeError as exc:
        raise BudgetExceededError(f"exact_alpha_k: {exc}") from exc


def exact_chi_k(g: Graph, k: int, budget: OracleBudget = DEFAULT_CHI_BUDGET) -> int:
    """chi_k(g) = chromatic number of g^k, exactly."""
    _guard(g, budget, "exact_chi_k")
    gp = graph_power(g, k)
    cap = int(budget.max_seconds * _NODES_PER_SECOND)
    try:
        return int(chromatic_number(_neighbor_masks(gp), gp.n, max_nodes=cap))
    except RuntimeError as exc:
        raise BudgetExceededError(f"exact_chi_k: {exc}") from exc


# ---------------------------------------------------------------------------
# Grid search over the bound formula
# ---------------------------------------------------------------------------

MAX_GRID_POINTS = 10 ** 8
_CHUNK = 1 << 16


def grid_search_bound(spec: DistinctSpectrum, prof: DiagonalProfile, k: int,
                      box: tuple[float, float] = (-5.0, 5.0),
                      step: float = 0.5):
    """Minimum of the two-sided eigenvalue count over a coefficient grid.

    Every grid point is a valid polynomial for the bound, so the result
    upper-bounds the optimizer's continuous optimum from above.
    """
    from .alpha import AlphaBoundResult, evaluate_bound  # cycle guard

    if k > 3:
        raise CapabilityError("grid search supports k <= 3")
    lo, hi = box
    axis = np.arange(lo, hi + step * 0.5, step, dtype=np.float64)
    npts = len(axis) ** (k + 1)
    if npts > MAX_GRID_POINTS:
        raise CapabilityError(f"grid of {npts} points exceeds {MAX_GRID_POINTS}")

    theta_pow = np.array(
        [[t ** i for i in range(k + 1)] for t in spec.thetas]
    )  # (d+1, k+1)
    mults = np.array(spec.mults, dtype=np.int64)
    diag_rows = np.array(
        sorted({tuple(row[: k + 1]) for row in prof.diag}), dtype=np.float64
    )  # distinct diagonal tuples suffice for min/max

    grids = np.meshgrid(*([axis] * (k + 1)), indexing="ij")
    coeffs = np.stack([g.ravel() for g in grids], axis=1)  # (npts, k+1)

    best_value = None
    best_point = None
    for start in range(0, coeffs.shape[0], _CHUNK):
        chunk = coeffs[start : start + _CHUNK]
        vals = chunk @ theta_pow.T                      # (B, d+1)
        diag = chunk @ diag_rows.T                      # (B, distinct)
        w = diag.min(axis=1)
        W = diag.max(axis=1)
        scale = np.maximum(
            1.0,
            np.maximum(np.abs(vals).max(axis=1), np.maximum(np.abs(w), np.abs(W))),
        )
        tol = 1e-9 * scale
        count_w = ((vals >= (w - tol)[:, None]) * mults[None, :]).sum(axis=1)
        count_W = ((vals <= (W + tol)[:, None]) * mults[None, :]).sum(axis=1)
        values = np.minimum(count_w, count_W)
        i = int(values.argmin())
        if best_value is None or values[i] < best_value:
            best_value = int(values[i])
            best_point = chunk[i].copy()

    witness = Polynomial(tuple(best_point))
    result = evaluate_bound(witness, None, spec, prof)
    return AlphaBoundResult(best_value, witness, result.negative_set, "evaluate_only")
