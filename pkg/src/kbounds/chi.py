"""Second inertia-type lower bound on the distance-k chromatic number.

For k-partially walk-regular graphs and trace-zero polynomials p, the
bound is 1 + max(n_-/n_+, n_+/n_-) over strict sign counts of p on the
spectrum.  Values are exact rationals built from integer counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InapplicableError, UndefinedBoundError
from .feasibility import EQ, GE, LE, LinearConstraintSystem, feasible
from .graphs import DiagonalProfile
from .polynomials import Polynomial
from .spectra import DistinctSpectrum

__all__ = [
    "ChiBoundResult",
    "evaluate_second_bound",
    "optimize_second_k1",
    "optimize_second_k2",
    "optimize_second_fixed_k",
    "first_bound",
]

ZERO_REL_TOL = 1e-7
TRACE_REL_TOL = 1e-6


@dataclass(frozen=True)
class ChiBoundResult:
    """Exact bound 1 + n_minus/n_plus with the realizing orientation."""

    value: Fraction
    n_plus: int
    n_minus: int
    witness: Polynomial
    method: str


def _classify(vals: list[float], rel_tol: float = ZERO_REL_TOL) -> list[int]:
    """Strict signs with a relative zero band: +1 / 0 / -1 per value."""
    scale = max(abs(v) for v in vals)
    if scale == 0.0:
        return [0] * len(vals)
    tol = rel_tol * scale
    return [0 if abs(v) <= tol else (1 if v > 0 else -1) for v in vals]


def _best_orientation(n_pos: int, n_neg: int, p: Polynomial,
                      method: str) -> ChiBoundResult | None:
    """Max of the two ratios over p and -p; None if neither is defined."""
    options = []
    if n_pos > 0:
        options.append((Fraction(n_neg, n_pos) + 1, n_pos, n_neg, p))
    if n_neg > 0:
        options.append((Fraction(n_pos, n_neg) + 1, n_neg, n_pos, p.negated()))
    if not options:
        return None
    value, np_, nm_, wit = max(options, key=lambda o: (o[0], -o[1]))
    return ChiBoundResult(value, np_, nm_, wit, method)


def evaluate_second_bound(p: Polynomial, spec: DistinctSpectrum,
                          zero_rel_tol: float = ZERO_REL_TOL) -> ChiBoundResult:
    vals = [p(t) for t in spec.thetas]
    total_abs = sum(m * abs(v) for v, m in zip(vals, spec.mults))
    trace = sum(m * v for v, m in zip(vals, spec.mults))
    if total_abs == 0.0:
        raise UndefinedBoundError("polynomial vanishes on the whole spectrum")
    if abs(trace) > TRACE_REL_TOL * total_abs:
        raise ValueError(f"trace condition violated: sum m_j p(theta_j) = {trace:g}")
    signs = _classify(vals, zero_rel_tol)
    n_pos = sum(m for s, m in zip(signs, spec.mults) if s > 0)
    n_neg = sum(m for s, m in zip(signs, spec.mults) if s < 0)
    result = _best_orientation(n_pos, n_neg, p, "evaluate_only")
    if result is None:
        raise UndefinedBoundError("both strict sign counts are zero")
    return result


def optimize_second_k1(spec: DistinctSpectrum) -> ChiBoundResult:
    """Closed form: the only trace-zero linear polynomials are multiples of x."""
    ztol = 1e-9 * max(1.0, max(abs(t) for t in spec.thetas))
    n_pos = sum(m for t, m in zip(spec.thetas, spec.mults) if t > ztol)
    n_neg = sum(m for t, m in zip(spec.thetas, spec.mults) if t < -ztol)
    if n_pos == 0 or n_neg == 0:
        raise UndefinedBoundError(
            "k=1 bound undefined: an eigenvalue sign class is empty"
        )
    result = _best_orientation(n_pos, n_neg, Polynomial((0.0, 1.0)), "k1")
    assert result is not None
    return result


def optimize_second_k2(spec: DistinctSpectrum, edge_count: int, n: int,
                       zero_rel_tol: float = ZERO_REL_TOL) -> ChiBoundResult:
    """Breakpoint scan over x^2 + a x - 2|E|/n (plus the k=1 line)."""
    c = 2.0 * edge_count / n
    breakpoints = []
    ztol = 1e-9 * max(1.0, max(abs(t) for t in spec.thetas))
    for t in spec.thetas:
        if abs(t) > ztol:
            breakpoints.append((c - t * t) / t)

    best: ChiBoundResult | None = None

    def consider(result: ChiBoundResult | None) -> None:
        nonlocal best
        if result is None:
            return
        if best is None or (result.value, -result.n_plus) > (best.value, -best.n_plus):
            best = result

    if breakpoints:
        breakpoints.sort()
        btol = 1e-9 * max(1.0, abs(breakpoints[0]), abs(breakpoints[-1]))
        uniq = [breakpoints[0]]
        for b in breakpoints[1:]:
            if b - uniq[-1] > btol:
                uniq.append(b)
        candidates = [uniq[0] - 1.0]
        for lo, hi in zip(uniq, uniq[1:]):
            candidates.append(0.5 * (lo + hi))
        candidates.extend(uniq)
        candidates.append(uniq[-1] + 1.0)
        for a in candidates:
            p = Polynomial((-c, a, 1.0))
            vals = [p(t) for t in spec.thetas]
            signs = _classify(vals, zero_rel_tol)
            n_pos = sum(m for s, m in zip(signs, spec.mults) if s > 0)
            n_neg = sum(m for s, m in zip(signs, spec.mults) if s < 0)
            consider(_best_orientation(n_pos, n_neg, p, "k2_breakpoints"))

    try:
        r1 = optimize_second_k1(spec)
        lifted = Polynomial((r1.witness.coeffs[0], r1.witness.coeffs[1], 0.0))
        consider(ChiBoundResult(r1.value, r1.n_plus, r1.n_minus, lifted, "k2_breakpoints"))
    except UndefinedBoundError:
        pass

    if best is None:
        raise UndefinedBoundError("no candidate polynomial has a positive value")
    return ChiBoundResult(best.value, best.n_plus, best.n_minus, best.witness,
                          "k2_breakpoints")


# ---------------------------------------------------------------------------
# Fixed k: sign-pattern enumeration + LP feasibility under the trace condition
# ---------------------------------------------------------------------------


def _sign_patterns(d: int, k: int) -> set[tuple[int, ...]]:
    """Sign patterns on theta_0..theta_d realizable by degree-<=k polynomials.

    Generated from canonical root placements: zeros on eigenvalues with
    parity 1 or 2, sign flips inside internal gaps, total root budget k,
    both leading signs.
    """
    patterns: set[tuple[int, ...]] = set()

    def emit(zeros: dict[int, int], flips: frozenset[int]) -> None:
        for s0 in (1, -1):
            sig = s0
            out = []
            for j in range(d + 1):
                if j >= 1 and j in flips:
                    sig = -sig
                if j in zeros:
                    out.append(0)
                    if zeros[j] % 2 == 1:
                        sig = -sig
                else:
                    out.append(sig)
            patterns.add(tuple(out))

    def rec_flips(zeros: dict[int, int], budget: int) -> None:
        gaps = list(range(1, d + 1))
        for r in range(0, min(budget, len(gaps)) + 1):
            for combo in combinations(gaps, r):
                emit(zeros, frozenset(combo))

    def rec_zeros(j: int, budget: int, zeros: dict[int, int]) -> None:
        if j > d:
            rec_flips(zeros, budget)
            return
        rec_zeros(j + 1, budget, zeros)
        if budget >= 1:
            zeros[j] = 1
            rec_zeros(j + 1, budget - 1, zeros)
            if budget >= 2:
                zeros[j] = 2
                rec_zeros(j + 1, budget - 2, zeros)
            del zeros[j]

    rec_zeros(0, k, {})
    return patterns


def _theta_row(spec: DistinctSpectrum, j: int, k: int) -> tuple[float, ...]:
    t = spec.thetas[j]
    return tuple(t ** i for i in range(k + 1))


def optimize_second_fixed_k(spec: DistinctSpectrum, k: int,
                            profile: DiagonalProfile | None = None) -> ChiBoundResult:
    """Best sign pattern with a feasible trace-zero polynomial.

    When a diagonal profile is supplied, k-partial walk-regularity is
    verified first and an InapplicableError raised otherwise.
    """
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    if profile is not None:
        if profile.k < k:
            raise ValueError("diagonal profile does not cover this k")
        if not profile.is_constant(k):
            raise InapplicableError(
                f"graph is not {k}-partially walk-regular; the bound does not apply"
            )

    d = spec.d
    trace_row = tuple(
        sum(m * (t ** i) for t, m in zip(spec.thetas, spec.mults))
        for i in range(k + 1)
    )
    best: ChiBoundResult | None = None
    for pattern in sorted(_sign_patterns(d, k)):
        n_pos = sum(m for s, m in zip(pattern, spec.mults) if s > 0)
        n_neg = sum(m for s, m in zip(pattern, spec.mults) if s < 0)
        if n_pos == 0:
            continue
        value = Fraction(n_neg, n_pos) + 1
        if best is not None and (value, -n_pos) <= (best.value, -best.n_plus):
            continue
        sys = LinearConstraintSystem(k + 1)
        sys.add(trace_row, EQ, 0.0, "trace")
        for j, s in enumerate(pattern):
            if s > 0:
                sys.add(_theta_row(spec, j, k), GE, 1.0, "eigenvalue-sign")
            elif s < 0:
                sys.add(_theta_row(spec, j, k), LE, -1.0, "eigenvalue-sign")
            else:
                sys.add(_theta_row(spec, j, k), EQ, 0.0, "eigenvalue-sign")
        point = feasible(sys)
        if point is not None:
            best = ChiBoundResult(value, n_pos, n_neg, Polynomial(tuple(point)),
                                  "fixed_k_enum")
    if best is None:
        raise UndefinedBoundError("no realizable sign pattern has a positive class")
    return best


def first_bound(alpha_result, n: int) -> Fraction:
    """Lower bound n / (alpha bound value) as an exact rational."""
    if alpha_result.value < 1:
        raise ValueError("alpha bound value must be at least 1")
    return Fraction(n, alpha_result.value)
