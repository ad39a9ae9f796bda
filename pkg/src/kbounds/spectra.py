"""Symmetric eigensolver wrapper and spectral preprocessing.

Eigenvalues come from LAPACK's symmetric solver (Householder
tridiagonalization plus implicitly shifted QR) via numpy; this module
adds the contract checks and the grouping into distinct eigenvalues
with multiplicities and prefix sums.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Spectrum", "DistinctSpectrum", "eigenvalues", "group_distinct", "default_grouping_tol"]


@dataclass(frozen=True)
class Spectrum:
    """All n eigenvalues, sorted descending."""

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DistinctSpectrum:
    """Distinct eigenvalues theta_0 > ... > theta_d with multiplicities.

    prefix[t] is the total multiplicity of theta_0..theta_{t-1}, so the
    weight of the index range [i, j) is prefix[j] - prefix[i].
    """

    thetas: tuple[float, ...]
    mults: tuple[int, ...]
    prefix: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.thetas) - 1

    @property
    def n(self) -> int:
        return self.prefix[-1]

    def weight(self, i: int, j: int) -> int:
        """Total multiplicity of thetas[i:j]."""
        return self.prefix[j] - self.prefix[i]


def eigenvalues(a: np.ndarray) -> Spectrum:
    """Spectrum of a symmetric matrix, descending."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("input must be a square matrix")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(a).max()))):
        raise ValueError("input matrix is not symmetric")
    vals = np.linalg.eigvalsh(a)
    return Spectrum(tuple(float(v) for v in vals[::-1]))


def default_grouping_tol(s: Spectrum) -> float:
    radius = max(abs(v) for v in s.values) if s.values else 0.0
    return 1e-8 * max(1.0, radius)


def group_distinct(s: Spectrum, tol: float | None = None) -> DistinctSpectrum:
    """Merge eigenvalues closer than tol; theta is the mean of its group."""
    if tol is None:
        tol = default_grouping_tol(s)
    if tol <= 0:
        raise ValueError("grouping tolerance must be positive")
    thetas: list[float] = []
    mults: list[int] = []
    group: list[float] = []
    for v in s.values:
        if group and group[-1] - v > tol:
            thetas.append(sum(group) / len(group))
            mults.append(len(group))
            group = []
        group.append(v)
    if group:
        thetas.append(sum(group) / len(group))
        mults.append(len(group))
    prefix = [0]
    for m in mults:
        prefix.append(prefix[-1] + m)
    return DistinctSpectrum(tuple(thetas), tuple(mults), tuple(prefix))


def spectrum_of(adjacency: np.ndarray, tol: float | None = None) -> DistinctSpectrum:
    """Convenience: eigenvalues + grouping in one call."""
    return group_distinct(eigenvalues(adjacency), tol)
