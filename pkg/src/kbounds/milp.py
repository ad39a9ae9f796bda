"""Abstract MILP models for the four bound formulations.

Models are built as plain linear rows over named variables, exportable
to LP text, and solvable exactly at desk scale by enumerating binary
assignments and delegating the continuous part to the feasibility
module.  The reference solver is the oracle for the model-equivalence
checks; it shares no search logic with the bound optimizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapabilityError
from .feasibility import EQ, GE, LE, LinearConstraintSystem, feasible
from .graphs import DiagonalProfile
from .spectra import DistinctSpectrum

__all__ = [
    "MilpRow",
    "MilpModel",
    "build_alpha_models",
    "build_chi_models",
    "solve_reference",
    "export",
]

DEFAULT_EPSILON = 1e-3
DEFAULT_M = 1e3
MAX_FREE_BINARIES = 24


@dataclass(frozen=True)
class MilpRow:
    name: str
    coeffs: dict[str, float]
    rel: str
    rhs: float


@dataclass
class MilpModel:
    continuous_vars: list[str]
    binary_vars: list[str]
    constraints: list[MilpRow]
    objective: tuple[str, dict[str, float], float]  # sense, linear form, constant
    bounds: dict[str, tuple[float, float]] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def validate(self) -> None:
        declared = set(self.continuous_vars) | set(self.binary_vars)
        for row in self.constraints:
            undeclared = set(row.coeffs) - declared
            if undeclared:
                raise ValueError(f"row {row.name} uses undeclared variables {undeclared}")
        if set(self.objective[1]) - declared:
            raise ValueError("objective uses undeclared variables")


def _avar(i: int) -> str:
    return f"a{i}"


def _theta_terms(spec: DistinctSpectrum, j: int, k: int) -> dict[str, float]:
    t = spec.thetas[j]
    return {_avar(i): t ** i for i in range(k + 1)}


def build_alpha_models(spec: DistinctSpectrum, prof: DiagonalProfile,
                       variant: str, u: int | None = None,
                       epsilon: float = DEFAULT_EPSILON,
                       M: float = DEFAULT_M) -> MilpModel:
    """MILP for the alpha bound: 'per_vertex' (with big-M) or 'unified'."""
    k = prof.k
    d = spec.d
    avars = [_avar(i) for i in range(k + 1)]
    bvars = [f"b{j}" for j in range(d + 1)]
    rows: list[MilpRow] = []

    if variant == "per_vertex":
        if u is None or not 0 <= u < prof.n:
            raise ValueError("per_vertex variant needs a valid distinguished vertex u")
        for v in range(prof.n):
            coeffs = {_avar(i): float(prof.diag[v][i]) for i in range(k + 1)}
            if v == u:
                rows.append(MilpRow(f"diag_u{v}", coeffs, EQ, 0.0))
            else:
                rows.append(MilpRow(f"diag_v{v}", coeffs, GE, 0.0))
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"b{j}"] = -M
            rows.append(MilpRow(f"sp_j{j}", coeffs, LE, -epsilon))
    elif variant == "unified":
        for v in range(prof.n):
            coeffs = {_avar(i): float(prof.diag[v][i]) for i in range(k + 1)}
            rows.append(MilpRow(f"diag_v{v}", coeffs, GE, 0.0))
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"b{j}"] = -1.0
            rows.append(MilpRow(f"sp_j{j}", coeffs, LE, -epsilon))
    else:
        raise ValueError("variant must be 'per_vertex' or 'unified'")

    model = MilpModel(
        continuous_vars=avars,
        binary_vars=bvars,
        constraints=rows,
        objective=("min", {f"b{j}": float(m) for j, m in enumerate(spec.mults)}, 0.0),
        meta={
            "kind": "alpha_vertex" if variant == "per_vertex" else "alpha_unified",
            "k": k,
            "n": spec.n,
            "d": d,
            "mults": tuple(spec.mults),
            "epsilon": epsilon,
            "M": M if variant == "per_vertex" else None,
            "u": u if variant == "per_vertex" else None,
        },
    )
    model.validate()
    return model


def build_chi_models(spec: DistinctSpectrum, n: int, k: int, variant: str,
                     ell: int | None = None,
                     epsilon: float = DEFAULT_EPSILON,
                     M: float = DEFAULT_M) -> MilpModel:
    """MILP for the second chi bound: 'fixed_ell' (big-M) or 'unified'."""
    d = spec.d
    avars = [_avar(i) for i in range(k + 1)]
    bvars = [f"b{j}" for j in range(d + 1)]
    cvars = [f"c{j}" for j in range(d + 1)]
    rows: list[MilpRow] = []

    trace = {
        _avar(i): sum(m * (t ** i) for t, m in zip(spec.thetas, spec.mults))
        for i in range(k + 1)
    }
    rows.append(MilpRow("trace", trace, EQ, 0.0))

    if variant == "fixed_ell":
        if ell is None or not 1 <= ell <= n - 1:
            raise ValueError("fixed_ell variant needs 1 <= ell <= n-1")
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"b{j}"] = -M
            rows.append(MilpRow(f"spb_j{j}", coeffs, LE, -epsilon))
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"c{j}"] = -M
            rows.append(MilpRow(f"spc_j{j}", coeffs, LE, 0.0))
        for j in range(d + 1):
            # p(theta_j) + M(1-c_j) >= eps: forces strict positivity when c_j=1
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"c{j}"] = -M
            rows.append(MilpRow(f"spc2_j{j}", coeffs, GE, epsilon - M))
        rows.append(MilpRow(
            "card", {f"c{j}": float(m) for j, m in enumerate(spec.mults)}, EQ, float(ell)
        ))
        objective = (
            "max",
            {f"b{j}": -float(m) / ell for j, m in enumerate(spec.mults)},
            1.0 + n / ell,
        )
        model = MilpModel(
            continuous_vars=avars,
            binary_vars=bvars + cvars,
            constraints=rows,
            objective=objective,
            meta={
                "kind": "chi_ell", "k": k, "n": n, "d": d,
                "mults": tuple(spec.mults), "epsilon": epsilon, "M": M, "ell": ell,
            },
        )
    elif variant == "unified":
        yvars = [f"y{l}" for l in range(1, n)]
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"b{j}"] = -1.0
            rows.append(MilpRow(f"spb_j{j}", coeffs, LE, -epsilon))
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"c{j}"] = -1.0
            rows.append(MilpRow(f"spc_j{j}", coeffs, LE, 0.0))
        for j in range(d + 1):
            coeffs = _theta_terms(spec, j, k)
            coeffs[f"c{j}"] = -1.0
            rows.append(MilpRow(f"spc2_j{j}", coeffs, GE, epsilon - 1.0))
        rows.append(MilpRow("sel", {y: 1.0 for y in yvars}, EQ, 1.0))
        card = {f"c{j}": float(m) for j, m in enumerate(spec.mults)}
        for l in range(1, n):
            card[f"y{l}"] = -float(l)
        rows.append(MilpRow("card", card, EQ, 0.0))
        for l in range(1, n):
            coeffs = {"t": float(l), f"y{l}": float(l * n)}
            for j, m in enumerate(spec.mults):
                coeffs[f"b{j}"] = float(m)
            rows.append(MilpRow(f"tlin_l{l}", coeffs, LE, float(n + l * n)))
        model = MilpModel(
            continuous_vars=avars + ["t"],
            binary_vars=bvars + cvars + yvars,
            constraints=rows,
            objective=("max", {"t": 1.0}, 1.0),
            bounds={"t": (0.0, float(n))},
            meta={
                "kind": "chi_unified", "k": k, "n": n, "d": d,
                "mults": tuple(spec.mults), "epsilon": epsilon, "M": None,
            },
        )
    else:
        raise ValueError("variant must be 'fixed_ell' or 'unified'")
    model.validate()
    return model


# ---------------------------------------------------------------------------
# Reference solver
# ---------------------------------------------------------------------------


def _interval_unions(d: int, q: int):
    """Unions of 0..q disjoint non-adjacent index intervals (includes ())."""
    out = [()]

    def rec(start: int, left: int, acc):
        if left == 0 or start > d:
            return
        for s in range(start, d + 1):
            for e in range(s, d + 1):
                cur = acc + ((s, e),)
                out.append(cur)
                rec(e + 2, left - 1, cur)

    rec(0, q, ())
    return out


def _union_set(pattern) -> frozenset[int]:
    return frozenset(j for s, e in pattern for j in range(s, e + 1))


def _alternations(forced: list[int]) -> int:
    seq = [s for s in forced if s != 0]
    return sum(1 for x, y in zip(seq, seq[1:]) if x != y)


def _continuous_check(model: MilpModel, assignment: dict[str, int]) -> np.ndarray | None:
    """Feasibility of the a-variables after substituting the binaries.

    Rows involving t are validated separately by the caller; pure-binary
    rows are checked here exactly.
    """
    k = model.meta["k"]
    sys = LinearConstraintSystem(k + 1)
    for row in model.constraints:
        if "t" in row.coeffs:
            continue
        acoeffs = [row.coeffs.get(_avar(i), 0.0) for i in range(k + 1)]
        binval = sum(
            coef * assignment[var]
            for var, coef in row.coeffs.items()
            if var in assignment
        )
        rhs = row.rhs - binval
        if any(acoeffs):
            sys.add(acoeffs, row.rel, rhs, row.name)
        else:
            if row.rel == GE and not 0.0 >= rhs - 1e-9:
                return None
            if row.rel == LE and not 0.0 <= rhs + 1e-9:
                return None
            if row.rel == EQ and abs(rhs) > 1e-9:
                return None
    return feasible(sys)


def _check_t_rows(model: MilpModel, assignment: dict[str, int],
                  t_value: Fraction) -> bool:
    tv = float(t_value)
    lo, hi = model.bounds.get("t", (0.0, float("inf")))
    if tv < lo - 1e-9 or tv > hi + 1e-9:
        return False
    for row in model.constraints:
        tc = row.coeffs.get("t", 0.0)
        if tc == 0.0:
            continue
        lhs = tc * tv + sum(
            coef * assignment[var]
            for var, coef in row.coeffs.items()
            if var != "t"
        )
        if row.rel == LE and lhs > row.rhs + 1e-6:
            return False
        if row.rel == GE and lhs < row.rhs - 1e-6:
            return False
    return True


def solve_reference(model: MilpModel):
    """Exact optimum by binary enumeration, or None when infeasible.

    Enumeration is pruned by three value-preserving facts: the set
    {p <= -eps} (zeros of b) and the set {p >= eps} (ones of c) of a
    degree-k polynomial are unions of at most floor(k/2)+1 index
    intervals, c_j = 1 forces b_j = 1, and forced signs can alternate at
    most k times.
    """
    kind = model.meta["kind"]
    k = model.meta["k"]
    d = model.meta["d"]
    mults = model.meta["mults"]
    n = model.meta["n"]
    q = k // 2 + 1

    free = 2 * (d + 1) if kind in ("chi_ell", "chi_unified") else d + 1
    if free > MAX_FREE_BINARIES:
        raise CapabilityError(
            f"{free} free binary variables exceed the reference solver limit "
            f"of {MAX_FREE_BINARIES}"
        )

    unions = _interval_unions(d, q)
    zero_sets = sorted(
        ({"set": _union_set(p), "weight": sum(mults[j] for j in _union_set(p))}
         for p in unions),
        key=lambda z: (-z["weight"], sorted(z["set"])),
    )

    if kind in ("alpha_vertex", "alpha_unified"):
        # minimize m.b  ==  maximize the zero-set weight
        for z in zero_sets:
            assignment = {f"b{j}": (0 if j in z["set"] else 1) for j in range(d + 1)}
            point = _continuous_check(model, assignment)
            if point is not None:
                value = n - z["weight"]
                out = dict(assignment)
                out.update({_avar(i): float(point[i]) for i in range(k + 1)})
                return value, out
        return None

    # chi models: b zero-set N (negative class), c one-set P (positive class)
    pos_sets = [z for z in zero_sets if z["weight"] >= 1]
    pairs = []
    for zn in zero_sets:
        for zp in pos_sets:
            if zn["set"] & zp["set"]:
                continue
            ell = zp["weight"]
            if not 1 <= ell <= n - 1:
                continue
            forced = [0] * (d + 1)
            for j in zn["set"]:
                forced[j] = -1
            for j in zp["set"]:
                forced[j] = 1
            if _alternations(forced) > k:
                continue
            pairs.append((zn, zp, ell))

    if kind == "chi_ell":
        ell0 = model.meta["ell"]
        pairs = [p for p in pairs if p[2] == ell0]
        pairs.sort(key=lambda p: (-p[0]["weight"], sorted(p[0]["set"]), sorted(p[1]["set"])))
    else:
        pairs.sort(key=lambda p: (
            -(Fraction(p[0]["weight"], p[2])), p[2],
            sorted(p[0]["set"]), sorted(p[1]["set"]),
        ))

    for zn, zp, ell in pairs:
        assignment = {f"b{j}": (0 if j in zn["set"] else 1) for j in range(d + 1)}
        assignment.update({f"c{j}": (1 if j in zp["set"] else 0) for j in range(d + 1)})
        if kind == "chi_unified":
            for l in range(1, n):
                assignment[f"y{l}"] = 1 if l == ell else 0
        point = _continuous_check(model, assignment)
        if point is None:
            continue
        mb = n - zn["weight"]
        value = 1 + Fraction(n - mb, ell)
        out = dict(assignment)
        out.update({_avar(i): float(point[i]) for i in range(k + 1)})
        if kind == "chi_unified":
            t_star = Fraction(n - mb, ell)
            if not _check_t_rows(model, assignment, t_star):
                continue
            out["t"] = float(t_star)
        return value, out
    return None


# ---------------------------------------------------------------------------
# LP text export
# ---------------------------------------------------------------------------


def _num(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _terms(coeffs: dict[str, float], order: list[str]) -> str:
    parts = []
    for var in order:
        if var not in coeffs:
            continue
        c = coeffs[var]
        if c == 0.0:
            continue
        if not parts:
            parts.append(f"{_num(c)} {var}" if c >= 0 else f"- {_num(-c)} {var}")
        elif c >= 0:
            parts.append(f"+ {_num(c)} {var}")
        else:
            parts.append(f"- {_num(-c)} {var}")
    return " ".join(parts) if parts else "0 " + order[0]


_REL_TEXT = {GE: ">=", LE: "<=", EQ: "="}


def export(model: MilpModel, format: str = "lp_text") -> str:
    """Serialize to the standard LP text format (deterministic)."""
    if format != "lp_text":
        raise ValueError(f"unknown export format {format!r}")
    order = list(model.continuous_vars) + list(model.binary_vars)
    lines = []
    lines.append(f"\\ kbounds model: {model.meta.get('kind', '?')} k={model.meta.get('k', '?')}")
    lines.append("Maximize" if model.objective[0] == "max" else "Minimize")
    obj = _terms(model.objective[1], order)
    const = model.objective[2]
    if const > 0:
        obj += f" + {_num(const)}"
    elif const < 0:
        obj += f" - {_num(-const)}"
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    for row in model.constraints:
        lines.append(f" {row.name}: {_terms(row.coeffs, order)} {_REL_TEXT[row.rel]} {_num(row.rhs)}")
    lines.append("Bounds")
    for var in model.continuous_vars:
        if var in model.bounds:
            lo, hi = model.bounds[var]
            lines.append(f" {_num(lo)} <= {var} <= {_num(hi)}")
        else:
            lines.append(f" {var} free")
    lines.append("Binaries")
    lines.append(" " + " ".join(model.binary_vars))
    lines.append("End")
    return "\n".join(lines) + "\n"
