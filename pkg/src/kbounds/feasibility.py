"""Feasibility testing of small linear systems over polynomial coefficients.

A system lives in dimension k+1 (k <= 5).  Feasibility is decided by
enumerating basic points: intersections of dim-subsets of the row
boundary hyperplanes together with the coordinate hyperplanes, plus the
corners of a large bounding box for unbounded cones.  Every candidate is
tested against all rows within an absolute slack.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import CapabilityError
from .kernels import feasible_point

__all__ = ["GE", "LE", "EQ", "Row", "LinearConstraintSystem", "feasible"]

GE = ">="
LE = "<="
EQ = "=="

MAX_DIM = 6
DEFAULT_SLACK = 1e-9
BOX = 1e6

_REL_CODE = {GE: 1, LE: -1, EQ: 0}


@dataclass(frozen=True)
class Row:
    coeffs: tuple[float, ...]
    rel: str
    rhs: float
    label: str = ""

    def __post_init__(self) -> None:
        if self.rel not in _REL_CODE:
            raise ValueError(f"relation must be one of {sorted(_REL_CODE)}")


@dataclass
class LinearConstraintSystem:
    dim: int
    rows: list[Row] = field(default_factory=list)

    def add(self, coeffs, rel: str, rhs: float, label: str = "") -> None:
        coeffs = tuple(float(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {self.dim}")
        self.rows.append(Row(coeffs, rel, float(rhs), label))

    def evaluate(self, point) -> list[float]:
        x = np.asarray(point, dtype=np.float64)
        return [float(np.dot(row.coeffs, x)) for row in self.rows]

    def satisfied(self, point, slack: float = DEFAULT_SLACK) -> bool:
        x = np.asarray(point, dtype=np.float64)
        for row in self.rows:
            v = float(np.dot(row.coeffs, x)) - row.rhs
            if row.rel == GE and v < -slack:
                return False
            if row.rel == LE and v > slack:
                return False
            if row.rel == EQ and abs(v) > slack:
                return False
        return True


def feasible(sys: LinearConstraintSystem, slack: float = DEFAULT_SLACK) -> np.ndarray | None:
    """A point satisfying every row within slack, or None."""
    dim = sys.dim
    if dim > MAX_DIM:
        raise CapabilityError(
            f"dimension {dim} exceeds the basic-point enumerator limit of {MAX_DIM}; "
            "use an external LP solver for larger systems"
        )
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if not sys.rows:
        return np.zeros(dim)

    lhs = np.array([row.coeffs for row in sys.rows], dtype=np.float64)
    rhs = np.array([row.rhs for row in sys.rows], dtype=np.float64)
    rel = np.array([_REL_CODE[row.rel] for row in sys.rows], dtype=np.int8)

    # Generators: row boundaries first, then the coordinate hyperplanes.
    gen = np.vstack([lhs, np.eye(dim)])
    gen_rhs = np.concatenate([rhs, np.zeros(dim)])
    corners = np.array(list(product((-BOX, BOX), repeat=dim)), dtype=np.float64)
    return feasible_point(gen, gen_rhs, lhs, rel, rhs, corners, slack)
