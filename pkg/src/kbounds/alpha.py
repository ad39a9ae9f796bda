"""Inertia-type upper bound on the k-independence number.

The bound counts eigenvalues (with multiplicity) on which a degree-k
polynomial with nonnegative closed-walk diagonal is nonnegative.  This
module evaluates the bound for a given polynomial and optimizes it:
closed form for k=1, linear two-pointer scans for k=2, and negative-set
enumeration with LP feasibility for general fixed k <= 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .feasibility import GE, LE, LinearConstraintSystem, Row, feasible
from .graphs import DiagonalProfile
from .polynomials import Polynomial
from .spectra import DistinctSpectrum

__all__ = [
    "PolynomialProfile",
    "AlphaBoundResult",
    "polynomial_profile",
    "evaluate_bound",
    "optimize_k1",
    "optimize_k2",
    "optimize_fixed_k",
    "prune_diagonal_constraints",
    "diagonal_rows_full",
]

_INF = math.inf


@dataclass(frozen=True)
class PolynomialProfile:
    """Values of p on the spectrum and on the diagonal of p(A).

    Lambda and lambda_small are the extreme values of p over the
    eigenvalues with the top index removed; they are informational only.
    """

    values_on_spectrum: tuple[float, ...]
    diag_values: tuple[float, ...]
    W: float
    w: float
    Lambda: float
    lambda_small: float


@dataclass(frozen=True)
class AlphaBoundResult:
    value: int
    witness: Polynomial
    negative_set: frozenset[int]
    method: str


def _diag_values(p: Polynomial, prof: DiagonalProfile) -> list[float]:
    if p.degree > prof.k:
        raise ValueError(
            f"polynomial degree {p.degree} exceeds the diagonal profile cap {prof.k}"
        )
    upto = min(len(p.coeffs), prof.k + 1)
    return [
        sum(p.coeffs[i] * row[i] for i in range(upto)) for row in prof.diag
    ]


def polynomial_profile(p: Polynomial, spec: DistinctSpectrum,
                       prof: DiagonalProfile) -> PolynomialProfile:
    diag = _diag_values(p, prof)
    vals = [p(t) for t in spec.thetas]
    tail = vals[1:] + ([vals[0]] if spec.mults[0] >= 2 else [])
    if not tail:
        tail = [vals[0]]  # single-vertex graph: [2, n] is empty, fall back
    return PolynomialProfile(
        values_on_spectrum=tuple(vals),
        diag_values=tuple(diag),
        W=max(diag),
        w=min(diag),
        Lambda=max(tail),
        lambda_small=min(tail),
    )


def evaluate_bound(p: Polynomial, g, spec: DistinctSpectrum,
                   prof: DiagonalProfile) -> AlphaBoundResult:
    """Two-sided eigenvalue count: min of the w-side and W-side totals."""
    if g is not None and prof.n != g.n:
        raise ValueError("diagonal profile does not belong to this graph")
    profile = polynomial_profile(p, spec, prof)
    vals = profile.values_on_spectrum
    scale = max(1.0, max(abs(v) for v in vals), abs(profile.W), abs(profile.w))
    tol = 1e-9 * scale
    count_w = sum(m for v, m in zip(vals, spec.mults) if v >= profile.w - tol)
    count_W = sum(m for v, m in zip(vals, spec.mults) if v <= profile.W + tol)
    if count_w <= count_W:
        value = count_w
        negset = frozenset(j for j, v in enumerate(vals) if v < profile.w - tol)
    else:
        value = count_W
        negset = frozenset(j for j, v in enumerate(vals) if v > profile.W + tol)
    return AlphaBoundResult(int(value), p, negset, "evaluate_only")


# ---------------------------------------------------------------------------
# k = 1: closed form from eigenvalue sign counts
# ---------------------------------------------------------------------------


def _zero_tol(spec: DistinctSpectrum) -> float:
    radius = max((abs(t) for t in spec.thetas), default=0.0)
    return 1e-9 * max(1.0, radius)


def optimize_k1(spec: DistinctSpectrum) -> AlphaBoundResult:
    n = spec.n
    if spec.d == 0:
        return AlphaBoundResult(n, Polynomial((1.0, 0.0)), frozenset(), "k1")
    ztol = _zero_tol(spec)
    count_ge = sum(m for t, m in zip(spec.thetas, spec.mults) if t >= -ztol)
    count_le = sum(m for t, m in zip(spec.thetas, spec.mults) if t <= ztol)
    if count_ge <= count_le:
        negset = frozenset(j for j, t in enumerate(spec.thetas) if t < -ztol)
        value, sign = count_ge, 1.0
    else:
        negset = frozenset(j for j, t in enumerate(spec.thetas) if t > ztol)
        value, sign = count_le, -1.0
    scale = 1.0 / min(abs(spec.thetas[j]) for j in negset)
    return AlphaBoundResult(int(value), Polynomial((0.0, sign * scale)), negset, "k1")


# ---------------------------------------------------------------------------
# k = 2: two-pointer scans over root intervals
# ---------------------------------------------------------------------------
#
# With p = a2 (x - alpha)(x - beta) the diagonal demands alpha*beta >= -d_min
# (a2 > 0) or alpha*beta <= -d_max (a2 < 0).  A candidate index range pins
# each root into a half-open interval next to the range (closed end = root
# placed on the adjacent eigenvalue, open end = root perturbed into the gap),
# and realizability is a product query over that box.


@dataclass(frozen=True)
class _Iv:
    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool

    def midish(self) -> float:
        if math.isinf(self.lo) and math.isinf(self.hi):
            return 0.0
        if math.isinf(self.lo):
            return self.hi - 1.0
        if math.isinf(self.hi):
            return self.lo + 1.0
        return 0.5 * (self.lo + self.hi)

    def approach(self, end: str, t: int) -> float:
        """t-th point of a sequence converging to the given end from inside."""
        target = self.lo if end == "lo" else self.hi
        if math.isinf(target):
            anchor = self.hi if end == "lo" else self.lo
            anchor = 0.0 if math.isinf(anchor) else anchor
            step = max(1.0, abs(anchor)) * (2.0 ** t)
            return anchor - step if end == "lo" else anchor + step
        closed = self.lo_closed if end == "lo" else self.hi_closed
        if closed:
            return target
        other = self.hi if end == "lo" else self.lo
        width = max(1.0, abs(target)) if math.isinf(other) else abs(other - target)
        delta = width * (2.0 ** (-t))
        return target + delta if end == "lo" else target - delta

    def contains(self, x: float) -> bool:
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if x > self.hi or (x == self.hi and not self.hi_closed):
            return False
        return True


def _ext_mul(x: float, y: float) -> float:
    if math.isinf(x) or math.isinf(y):
        if x == 0.0 or y == 0.0:
            return 0.0
        return _INF if (x > 0) == (y > 0) else -_INF
    return x * y


def _product_sup(b_iv: _Iv, a_iv: _Iv) -> tuple[float, bool, tuple[str, str]]:
    """Supremum of beta*alpha over the box, its attainability, its corner."""
    best, attained, corner = -_INF, False, ("lo", "lo")
    for bend, bval, bcl in (("lo", b_iv.lo, b_iv.lo_closed), ("hi", b_iv.hi, b_iv.hi_closed)):
        for aend, aval, acl in (("lo", a_iv.lo, a_iv.lo_closed), ("hi", a_iv.hi, a_iv.hi_closed)):
            v = _ext_mul(bval, aval)
            att = bcl and acl and not math.isinf(bval) and not math.isinf(aval)
            if v > best or (v == best and att and not attained):
                best, attained, corner = v, att, (bend, aend)
    return best, attained, corner


def _pick_in_window(iv: _Iv, lo_req: float, hi_req: float) -> float | None:
    """Interior-preferring point of iv intersected with [lo_req, hi_req]."""
    lo, lo_closed = (lo_req, True) if lo_req > iv.lo else (iv.lo, iv.lo_closed)
    hi, hi_closed = (hi_req, True) if hi_req < iv.hi else (iv.hi, iv.hi_closed)
    if lo > hi:
        return None
    if lo == hi:
        return lo if (lo_closed and hi_closed) else None
    if math.isinf(lo) and math.isinf(hi):
        return 0.0
    if math.isinf(lo):
        return hi - max(1.0, abs(hi))
    if math.isinf(hi):
        return lo + max(1.0, abs(lo))
    return 0.5 * (lo + hi)


def _candidate_values(iv: _Iv) -> list[float]:
    """Deterministic ladder of points inside iv, ends approached geometrically."""
    out = [iv.midish()]
    if not math.isinf(iv.lo) and iv.lo_closed:
        out.append(iv.lo)
    if not math.isinf(iv.hi) and iv.hi_closed:
        out.append(iv.hi)
    for t in (2, 6, 12, 20, 40, 80, 160):
        out.append(iv.approach("lo", t))
        out.append(iv.approach("hi", t))
    return [x for x in out if iv.contains(x)]


def _beta_for_alpha_ge(b_iv: _Iv, alpha: float, K: float) -> float | None:
    """beta in b_iv with alpha*beta >= K."""
    if alpha > 0.0:
        return _pick_in_window(b_iv, K / alpha, _INF)
    if alpha < 0.0:
        return _pick_in_window(b_iv, -_INF, K / alpha)
    if 0.0 >= K:
        return _pick_in_window(b_iv, -_INF, _INF)
    return None


def _edge_separation(x: float, iv: _Iv) -> float:
    """Relative distance of x from the open finite ends of iv.

    Open ends sit on eigenvalues that must stay strictly inside or
    outside the root interval, so roots should keep clear of them."""
    sep = _INF
    if not math.isinf(iv.lo) and not iv.lo_closed:
        sep = min(sep, abs(x - iv.lo) / max(1.0, abs(iv.lo)))
    if not math.isinf(iv.hi) and not iv.hi_closed:
        sep = min(sep, abs(x - iv.hi) / max(1.0, abs(iv.hi)))
    return sep


def _find_product_ge(b_iv: _Iv, a_iv: _Iv, K: float) -> tuple[float, float] | None:
    """(beta, alpha) in the box with beta*alpha >= K, or None.

    Feasibility is decided exactly from the corner suprema of the
    bilinear product; realization then fixes alpha on a geometric ladder
    and solves the resulting one-dimensional window for beta, preferring
    points well separated from the excluded eigenvalues.
    """
    eps = 1e-9 * max(1.0, abs(K))
    sup, attained, corner = _product_sup(b_iv, a_iv)
    if sup < K - eps:
        return None
    if sup <= K + eps and not attained:
        return None  # sup only approached on an open boundary: not realizable
    fallback, fallback_score = None, None
    for alpha in _candidate_values(a_iv):
        beta = _beta_for_alpha_ge(b_iv, alpha, K)
        if beta is None or not b_iv.contains(beta) or beta * alpha < K - eps:
            continue
        sep = min(_edge_separation(beta, b_iv), _edge_separation(alpha, a_iv))
        mag = max(abs(beta), abs(alpha))
        if sep > 1e-6 and mag <= 1e6:
            return beta, alpha
        score = (min(sep, 1e-6), -mag)
        if fallback_score is None or score > fallback_score:
            fallback, fallback_score = (beta, alpha), score
    if fallback is not None:
        return fallback
    if attained:
        bval = b_iv.lo if corner[0] == "lo" else b_iv.hi
        aval = a_iv.lo if corner[1] == "lo" else a_iv.hi
        return bval, aval
    return None


def _neg(iv: _Iv) -> _Iv:
    return _Iv(-iv.hi, -iv.lo, iv.hi_closed, iv.lo_closed)


def _find_product_le(b_iv: _Iv, a_iv: _Iv, K: float) -> tuple[float, float] | None:
    got = _find_product_ge(b_iv, _neg(a_iv), -K)
    if got is None:
        return None
    beta, alpha = got
    return beta, -alpha


def _beta_interval_open(spec: DistinctSpectrum, i1: int) -> _Iv:
    # beta > theta_{i1} (strict: theta_{i1} is interior), beta <= theta_{i1-1}
    hi = spec.thetas[i1 - 1] if i1 > 0 else _INF
    return _Iv(spec.thetas[i1], hi, False, i1 > 0)


def _alpha_interval_open(spec: DistinctSpectrum, i2: int) -> _Iv:
    lo = spec.thetas[i2 + 1] if i2 < spec.d else -_INF
    return _Iv(lo, spec.thetas[i2], i2 < spec.d, False)


def _beta_interval_closed(spec: DistinctSpectrum, i1: int) -> _Iv:
    # theta_{i1} <= beta < theta_{i1-1}: theta_{i1} is counted (root allowed on it)
    hi = spec.thetas[i1 - 1] if i1 > 0 else _INF
    return _Iv(spec.thetas[i1], hi, True, False)


def _alpha_interval_closed(spec: DistinctSpectrum, i2: int) -> _Iv:
    lo = spec.thetas[i2 + 1] if i2 < spec.d else -_INF
    return _Iv(lo, spec.thetas[i2], False, True)


def _max_interior(spec: DistinctSpectrum, K: float):
    """Largest-weight index range realizable strictly inside (alpha, beta)
    subject to alpha*beta >= K; returns (weight, i1, i2, (alpha, beta))."""
    d = spec.d
    best = None
    j = -1
    for i1 in range(d + 1):
        if j < i1 - 1:
            j = i1 - 1
        while j + 1 <= d and _find_product_ge(
            _beta_interval_open(spec, i1), _alpha_interval_open(spec, j + 1), K
        ) is not None:
            j += 1
        if j >= i1:
            w = spec.weight(i1, j + 1)
            if best is None or w > best[0]:
                point = _find_product_ge(
                    _beta_interval_open(spec, i1), _alpha_interval_open(spec, j), K
                )
                if point is not None:
                    best = (w, i1, j, point)
    return best


def _min_closed_count(spec: DistinctSpectrum, K: float):
    """Smallest-weight index range realizable as the hit set of a closed
    interval [alpha, beta] subject to alpha*beta <= K."""
    d = spec.d
    best = None
    j = 0
    for i1 in range(d + 1):
        j = max(j, i1)
        while j <= d and _find_product_le(
            _beta_interval_closed(spec, i1), _alpha_interval_closed(spec, j), K
        ) is None:
            j += 1
        if j > d:
            break
        w = spec.weight(i1, j + 1)
        if best is None or w < best[0]:
            point = _find_product_le(
                _beta_interval_closed(spec, i1), _alpha_interval_closed(spec, j), K
            )
            if point is not None:
                best = (w, i1, j, point)
    return best


def _scaled_root_witness(alpha: float, beta: float, leading: float,
                         spec: DistinctSpectrum, negset: frozenset[int]) -> Polynomial:
    base = Polynomial.from_roots((alpha, beta), leading, 2)
    worst = min(abs(base(spec.thetas[j])) for j in negset)
    return base.scaled(1.0 / worst)


def _clamp_zeros(spec: DistinctSpectrum) -> DistinctSpectrum:
    """Snap a near-zero theta to exactly 0 so eigensolver jitter cannot
    flip the sign structure that the root-interval feasibility relies on."""
    ztol = _zero_tol(spec)
    thetas = tuple(0.0 if abs(t) <= ztol else t for t in spec.thetas)
    if thetas == spec.thetas:
        return spec
    return DistinctSpectrum(thetas, spec.mults, spec.prefix)


def optimize_k2(spec: DistinctSpectrum, prof: DiagonalProfile) -> AlphaBoundResult:
    n = spec.n
    if spec.d == 0:
        return AlphaBoundResult(n, Polynomial.one(2), frozenset(), "k2_two_pointer")
    spec = _clamp_zeros(spec)

    candidates: list[tuple[int, Polynomial, frozenset[int]]] = []
    candidates.append((n, Polynomial.one(2), frozenset()))

    r1 = optimize_k1(spec)
    w1 = Polynomial((r1.witness.coeffs[0], r1.witness.coeffs[1], 0.0))
    candidates.append((r1.value, w1, r1.negative_set))

    got = _max_interior(spec, -float(prof.d_min))
    if got is not None:
        weight, i1, i2, point = got
        negset = frozenset(range(i1, i2 + 1))
        beta, alpha = point
        witness = _scaled_root_witness(alpha, beta, 1.0, spec, negset)
        candidates.append((n - weight, witness, negset))

    got = _min_closed_count(spec, -float(prof.d_max))
    if got is not None:
        weight, i1, i2, point = got
        negset = frozenset(range(0, i1)) | frozenset(range(i2 + 1, spec.d + 1))
        beta, alpha = point
        if negset:
            witness = _scaled_root_witness(alpha, beta, -1.0, spec, negset)
        else:
            witness = Polynomial.from_roots((alpha, beta), -1.0, 2)
        candidates.append((weight, witness, negset))

    value, witness, negset = min(candidates, key=lambda c: c[0])
    return AlphaBoundResult(int(value), witness, negset, "k2_two_pointer")


# ---------------------------------------------------------------------------
# Fixed k: negative-set enumeration + LP feasibility
# ---------------------------------------------------------------------------


def _convex_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Strict convex hull vertices (monotone chain, collinear dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def prune_diagonal_constraints(prof: DiagonalProfile, k: int) -> list[Row]:
    """Nonredundant closed-walk rows sum_i a_i (A^i)_vv >= 0 in dimension k+1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return [Row((1.0, 0.0), GE, 0.0, "diagonal")]
    if k == 2:
        rows = []
        for dv in dict.fromkeys((prof.d_min, prof.d_max)):
            rows.append(Row((1.0, 0.0, float(dv)), GE, 0.0, "diagonal"))
        return rows
    if k == 3:
        hull = _convex_hull(list(prof.hull_points))
        return [
            Row((1.0, 0.0, float(dv), float(tv2)), GE, 0.0, "diagonal")
            for dv, tv2 in hull
        ]
    return diagonal_rows_full(prof, k)


def diagonal_rows_full(prof: DiagonalProfile, k: int) -> list[Row]:
    """One row per distinct diagonal tuple (no geometric pruning)."""
    if prof.k < k:
        raise ValueError("diagonal profile does not cover this k")
    seen: dict[tuple[float, ...], None] = {}
    for row in prof.diag:
        seen[tuple(float(row[i]) for i in range(k + 1))] = None
    return [Row(coeffs, GE, 0.0, "diagonal") for coeffs in seen]


def _interval_unions(d: int, q: int) -> list[tuple[tuple[int, int], ...]]:
    """All unions of 1..q disjoint, non-adjacent index intervals of {0..d}."""
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(start: int, left: int, acc: tuple[tuple[int, int], ...]) -> None:
        if acc:
            out.append(acc)
        if left == 0 or start > d:
            return
        for s in range(start, d + 1):
            for e in range(s, d + 1):
                rec(e + 2, left - 1, acc + ((s, e),))

    rec(0, q, ())
    return out


def _pattern_weight(spec: DistinctSpectrum, pattern) -> int:
    return sum(spec.weight(s, e + 1) for s, e in pattern)


def _theta_row(spec: DistinctSpectrum, j: int, k: int) -> tuple[float, ...]:
    t = spec.thetas[j]
    return tuple(t ** i for i in range(k + 1))


def optimize_fixed_k(spec: DistinctSpectrum, prof: DiagonalProfile, k: int,
                     prune: bool = True) -> AlphaBoundResult:
    if not 1 <= k <= 5:
        raise ValueError("k must be between 1 and 5")
    n = spec.n
    if spec.d == 0:
        return AlphaBoundResult(n, Polynomial.one(k), frozenset(), "fixed_k_enum")
    spec = _clamp_zeros(spec)

    diag_rows = prune_diagonal_constraints(prof, k) if prune else diagonal_rows_full(prof, k)
    q = k // 2 + 1
    patterns = _interval_unions(spec.d, q)
    patterns.sort(key=lambda pat: (-_pattern_weight(spec, pat),
                                   tuple(s for s, _ in pat),
                                   tuple(e for _, e in pat)))
    for pattern in patterns:
        sys = LinearConstraintSystem(k + 1)
        for row in diag_rows:
            sys.rows.append(row)
        for s, e in pattern:
            for j in range(s, e + 1):
                sys.add(_theta_row(spec, j, k), LE, -1.0, "eigenvalue-sign")
        point = feasible(sys)
        if point is not None:
            negset = frozenset(
                j for s, e in pattern for j in range(s, e + 1)
            )
            value = n - _pattern_weight(spec, pattern)
            return AlphaBoundResult(int(value), Polynomial(tuple(point)), negset,
                                    "fixed_k_enum")
    return AlphaBoundResult(n, Polynomial.one(k), frozenset(), "fixed_k_enum")
