"""Decision polynomials p(x) = a_0 + a_1 x + ... + a_k x^k."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Polynomial"]


@dataclass(frozen=True)
class Polynomial:
    """Coefficient vector a_0..a_k, low degree first."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")

    @property
    def k(self) -> int:
        """Degree cap (length of the coefficient vector minus one)."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Effective degree, ignoring trailing zero coefficients."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0.0:
                return i
        return 0

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scaled(self, c: float) -> "Polynomial":
        return Polynomial(tuple(c * a for a in self.coeffs))

    def shifted(self, gamma: float) -> "Polynomial":
        """p - gamma (constant shift)."""
        coeffs = list(self.coeffs)
        coeffs[0] -= gamma
        return Polynomial(tuple(coeffs))

    def negated(self) -> "Polynomial":
        return self.scaled(-1.0)

    @staticmethod
    def from_roots(roots, leading: float, k: int) -> "Polynomial":
        """leading * prod (x - r), padded with zeros to length k+1."""
        coeffs = [leading]
        for r in roots:
            coeffs = [0.0] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= r * coeffs[i + 1]
        while len(coeffs) < k + 1:
            coeffs.append(0.0)
        if len(coeffs) > k + 1:
            raise ValueError("too many roots for the degree cap")
        return Polynomial(tuple(coeffs))

    @staticmethod
    def one(k: int) -> "Polynomial":
        return Polynomial((1.0,) + (0.0,) * k)
