"""Command-line frontend and bound-table regression harness.

Subcommands: bound, export-milp, oracle, bench, catalog.
Exit codes: 0 ok, 1 benchmark mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import alpha as alpha_mod
from . import chi as chi_mod
from . import milp as milp_mod
from .errors import BudgetExceededError, InapplicableError, KboundsError, UndefinedBoundError
from .graphs import Graph, diagonal_profile, is_k_partially_walk_regular, load_catalog, parse_graph
from .oracles import OracleBudget, exact_alpha_k, exact_chi_k
from .spectra import group_distinct, eigenvalues

CSV_FIELDS = ["name", "n", "k", "bound", "value", "n_plus", "n_minus", "method", "ms"]


@dataclass
class RunConfig:
    k: int
    bound: str = "alpha"              # alpha | chi_first | chi_second
    method: str = "auto"              # auto | k1 | k2 | fixed_k | milp_reference
    tol_group: float | None = None
    tol_zero: float = chi_mod.ZERO_REL_TOL
    output: str = "table"             # table | csv | json
    export_dir: str | None = None

    def __post_init__(self) -> None:
        if self.method == "k1" and self.k != 1:
            raise ValueError("method k1 requires k=1")
        if self.method == "k2" and self.k != 2:
            raise ValueError("method k2 requires k=2")


@dataclass
class ExpectedRecord:
    name: str
    k: int
    alpha_exact: int | None
    alpha_bound: int | None
    chi_applicable: bool


def default_catalog_dir() -> Path:
    return Path(resources.files("kbounds") / "catalog")


def _resolve_inputs(inputs: list[str], catalog_dir: Path) -> list[tuple[str, Graph | str]]:
    """Map each input token to (name, Graph) or (name, error message)."""
    try:
        catalog = dict(load_catalog(catalog_dir))
    except KboundsError:
        catalog = {}
    out: list[tuple[str, Graph | str]] = []
    for token in inputs:
        if token in catalog:
            out.append((token, catalog[token]))
            continue
        path = Path(token)
        if not path.is_file():
            out.append((token, f"not a catalog name or readable file: {token}"))
            continue
        try:
            text = path.read_text()
            fmt = "edge_list" if text.lstrip().startswith("n=") else "graph6"
            out.append((path.stem, parse_graph(text, fmt, name=path.stem)))
        except (KboundsError, UnicodeDecodeError) as exc:
            out.append((path.stem, str(exc)))
    return out


def _fraction_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _alpha_result(g: Graph, cfg: RunConfig):
    spec = group_distinct(eigenvalues(g.adjacency), cfg.tol_group)
    prof = diagonal_profile(g, max(cfg.k, 3))
    method = cfg.method
    if method == "auto":
        method = {1: "k1", 2: "k2"}.get(cfg.k, "fixed_k")
    if method == "k1":
        return alpha_mod.optimize_k1(spec), spec
    if method == "k2":
        return alpha_mod.optimize_k2(spec, prof), spec
    if method == "fixed_k":
        return alpha_mod.optimize_fixed_k(spec, prof, cfg.k), spec
    if method == "milp_reference":
        prof_k = diagonal_profile(g, cfg.k)
        model = milp_mod.build_alpha_models(spec, prof_k, "unified")
        solved = milp_mod.solve_reference(model)
        value, assignment = solved
        coeffs = tuple(assignment[f"a{i}"] for i in range(cfg.k + 1))
        from .polynomials import Polynomial

        negset = frozenset(j for j in range(spec.d + 1) if assignment[f"b{j}"] == 0)
        return alpha_mod.AlphaBoundResult(value, Polynomial(coeffs), negset,
                                          "fixed_k_enum"), spec
    raise ValueError(f"unknown method {method!r}")


def _chi_second_result(g: Graph, cfg: RunConfig):
    spec = group_distinct(eigenvalues(g.adjacency), cfg.tol_group)
    if not is_k_partially_walk_regular(g, cfg.k):
        raise InapplicableError(
            f"graph is not {cfg.k}-partially walk-regular"
        )
    method = cfg.method
    if method == "auto":
        method = {1: "k1", 2: "k2"}.get(cfg.k, "fixed_k")
    if method == "k1":
        return chi_mod.optimize_second_k1(spec), spec
    if method == "k2":
        return chi_mod.optimize_second_k2(spec, g.edge_count, g.n,
                                          zero_rel_tol=cfg.tol_zero), spec
    if method == "fixed_k":
        return chi_mod.optimize_second_fixed_k(spec, cfg.k), spec
    if method == "milp_reference":
        model = milp_mod.build_chi_models(spec, g.n, cfg.k, "unified")
        solved = milp_mod.solve_reference(model)
        if solved is None:
            raise UndefinedBoundError("reference MILP infeasible")
        value, assignment = solved
        from .polynomials import Polynomial

        coeffs = tuple(assignment[f"a{i}"] for i in range(cfg.k + 1))
        n_plus = sum(m for j, m in enumerate(spec.mults) if assignment[f"c{j}"] == 1)
        n_minus = sum(m for j, m in enumerate(spec.mults) if assignment[f"b{j}"] == 0)
        return chi_mod.ChiBoundResult(value, n_plus, n_minus, Polynomial(coeffs),
                                      "fixed_k_enum"), spec
    raise ValueError(f"unknown method {method!r}")


def _run_one(name: str, g: Graph, cfg: RunConfig) -> dict:
    start = time.perf_counter()
    record: dict = {"name": name, "n": g.n, "k": cfg.k, "bound": cfg.bound}
    try:
        if cfg.bound == "alpha":
            result, spec = _alpha_result(g, cfg)
            record.update({
                "d_plus_1": spec.d + 1,
                "value": result.value,
                "witness": list(result.witness.coeffs),
                "method": result.method,
            })
        elif cfg.bound == "chi_first":
            result, spec = _alpha_result(g, cfg)
            record.update({
                "d_plus_1": spec.d + 1,
                "value": _fraction_str(chi_mod.first_bound(result, g.n)),
                "witness": list(result.witness.coeffs),
                "method": result.method,
                "applicable": True,
            })
        elif cfg.bound == "chi_second":
            try:
                result, spec = _chi_second_result(g, cfg)
                record.update({
                    "d_plus_1": spec.d + 1,
                    "value": _fraction_str(result.value),
                    "n_plus": result.n_plus,
                    "n_minus": result.n_minus,
                    "witness": list(result.witness.coeffs),
                    "method": result.method,
                    "applicable": True,
                })
            except (InapplicableError, UndefinedBoundError) as exc:
                record.update({"value": "n/a", "applicable": False, "note": str(exc)})
        else:
            raise ValueError(f"unknown bound {cfg.bound!r}")
    except KboundsError as exc:
        record["error"] = str(exc)
    record["ms"] = (time.perf_counter() - start) * 1000.0
    return record


def run(config: RunConfig, inputs: list[tuple[str, Graph | str]]) -> dict:
    """Per-graph records in input order; parse errors become error records."""
    records: list[dict | None] = [None] * len(inputs)
    jobs = []
    for i, (name, item) in enumerate(inputs):
        if isinstance(item, str):
            records[i] = {"name": name, "error": item, "ms": 0.0}
        else:
            jobs.append((i, name, item))
    with concurrent.futures.ThreadPoolExecutor() as pool:
        futures = {pool.submit(_run_one, name, g, config): i for i, name, g in jobs}
        for fut, i in futures.items():
            records[i] = fut.result()
    return {"config": {
        "k": config.k, "bound": config.bound, "method": config.method,
        "output": config.output,
    }, "records": records}


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore",
                            lineterminator="\n")
    writer.writeheader()
    for rec in report["records"]:
        row = {f: rec.get(f, "") for f in CSV_FIELDS}
        if "error" in rec:
            row["value"] = f"error: {rec['error']}"
        if isinstance(row.get("ms"), float):
            row["ms"] = f"{row['ms']:.3f}"
        writer.writerow(row)
    return buf.getvalue()


def report_table(report: dict) -> str:
    lines = [f"{'graph':<18}{'n':>4}{'k':>3}  {'value':>8}  {'method':<14}{'ms':>9}"]
    for rec in report["records"]:
        if "error" in rec:
            lines.append(f"{rec['name']:<18} error: {rec['error']}")
            continue
        lines.append(
            f"{rec['name']:<18}{rec['n']:>4}{rec['k']:>3}  {str(rec.get('value')):>8}"
            f"  {rec.get('method', 'n/a'):<14}{rec['ms']:>9.2f}"
        )
    return "\n".join(lines) + "\n"


def render(report: dict, output: str) -> str:
    if output == "json":
        return report_json(report)
    if output == "csv":
        return report_csv(report)
    return report_table(report)


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def load_expected(path: Path) -> list[ExpectedRecord]:
    out = []
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(ExpectedRecord(
                name=row["name"],
                k=int(row["k"]),
                alpha_exact=int(row["alpha_exact"]) if row["alpha_exact"] else None,
                alpha_bound=int(row["alpha_bound"]) if row["alpha_bound"] else None,
                chi_applicable=row["chi_applicable"].strip().lower() == "true",
            ))
    return out


def bench(expected: list[ExpectedRecord], catalog_dir: Path, out=None) -> int:
    """Compare computed alpha bounds to the expected integers; 0 iff all match."""
    out = out if out is not None else sys.stdout
    catalog = dict(load_catalog(catalog_dir))
    missing = [e.name for e in expected if e.name not in catalog]
    if missing:
        raise KboundsError(f"expected records name unknown graphs: {sorted(set(missing))}")
    mismatches = 0
    out.write(f"{'graph':<18}{'k':>3}{'expected':>10}{'computed':>10}{'ms':>9}  status\n")
    for rec in expected:
        g = catalog[rec.name]
        spec = group_distinct(eigenvalues(g.adjacency))
        prof = diagonal_profile(g, max(rec.k, 3))
        start = time.perf_counter()
        if rec.k == 2:
            value = alpha_mod.optimize_k2(spec, prof).value
        else:
            value = alpha_mod.optimize_fixed_k(spec, prof, rec.k).value
        ms = (time.perf_counter() - start) * 1000.0
        ok = value == rec.alpha_bound
        mismatches += 0 if ok else 1
        out.write(
            f"{rec.name:<18}{rec.k:>3}{rec.alpha_bound:>10}{value:>10}{ms:>9.2f}"
            f"  {'ok' if ok else 'MISMATCH'}\n"
        )
    out.write(f"{len(expected)} rows, {mismatches} mismatches\n")
    return 0 if mismatches == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--tol-group", type=float, default=None)
    p.add_argument("--tol-zero", type=float, default=chi_mod.ZERO_REL_TOL)
    p.add_argument("--out", type=str, default=None, help="write output to this file")
    p.add_argument("--catalog", type=str, default=None, help="catalog directory")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kbounds",
                                 description="spectral bounds on alpha_k and chi_k")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="compute an optimized bound per graph")
    _add_common(p)
    p.add_argument("--bound", choices=["alpha", "chi_first", "chi_second"],
                   default="alpha")
    p.add_argument("--method",
                   choices=["auto", "k1", "k2", "fixed_k", "milp_reference"],
                   default="auto")
    p.add_argument("inputs", nargs="+", help="catalog names or graph files")

    p = sub.add_parser("export-milp", help="write LP files for the MILP models")
    _add_common(p)
    p.add_argument("--formulation",
                   choices=["alpha_unified", "alpha_vertex", "chi_unified", "chi_ell"],
                   action="append", default=None)
    p.add_argument("--u", type=int, default=0, help="distinguished vertex")
    p.add_argument("--ell", type=int, default=1, help="positive-class size")
    p.add_argument("inputs", nargs="+")

    p = sub.add_parser("oracle", help="exact alpha_k / chi_k by brute force")
    _add_common(p)
    p.add_argument("--bound", choices=["alpha", "chi"], default="alpha")
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=60.0)
    p.add_argument("inputs", nargs="+")

    p = sub.add_parser("bench", help="check bounds against the expected-results table")
    _add_common(p)
    p.add_argument("--expected", type=str, default=None, help="expected-results CSV")

    p = sub.add_parser("catalog", help="list and validate the graph catalog")
    _add_common(p)
    return ap


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    catalog_dir = Path(args.catalog) if args.catalog else default_catalog_dir()

    try:
        if args.command == "bound":
            cfg = RunConfig(k=args.k, bound=args.bound, method=args.method,
                            tol_group=args.tol_group, tol_zero=args.tol_zero,
                            output=args.format)
            inputs = _resolve_inputs(args.inputs, catalog_dir)
            report = run(cfg, inputs)
            _emit(render(report, args.format), args.out)
            return 2 if any("error" in r for r in report["records"]) else 0

        if args.command == "export-milp":
            forms = args.formulation or ["alpha_unified", "chi_unified"]
            inputs = _resolve_inputs(args.inputs, catalog_dir)
            outdir = Path(args.out) if args.out else Path(".")
            outdir.mkdir(parents=True, exist_ok=True)
            bad = False
            for name, item in inputs:
                if isinstance(item, str):
                    sys.stderr.write(f"{name}: {item}\n")
                    bad = True
                    continue
                spec = group_distinct(eigenvalues(item.adjacency), args.tol_group)
                prof = diagonal_profile(item, args.k)
                for form in forms:
                    if form == "alpha_unified":
                        model = milp_mod.build_alpha_models(spec, prof, "unified")
                    elif form == "alpha_vertex":
                        model = milp_mod.build_alpha_models(spec, prof, "per_vertex",
                                                            u=args.u)
                    elif form == "chi_unified":
                        model = milp_mod.build_chi_models(spec, item.n, args.k, "unified")
                    else:
                        model = milp_mod.build_chi_models(spec, item.n, args.k,
                                                          "fixed_ell", ell=args.ell)
                    path = outdir / f"{name}_{form}_k{args.k}.lp"
                    path.write_text(milp_mod.export(model))
                    sys.stdout.write(f"wrote {path}\n")
            return 2 if bad else 0

        if args.command == "oracle":
            inputs = _resolve_inputs(args.inputs, catalog_dir)
            budget = OracleBudget(
                max_vertices=args.max_vertices or (30 if args.bound == "alpha" else 20),
                max_seconds=args.max_seconds,
            )
            records = []
            for name, item in inputs:
                if isinstance(item, str):
                    records.append({"name": name, "error": item, "ms": 0.0})
                    continue
                start = time.perf_counter()
                rec = {"name": name, "n": item.n, "k": args.k, "bound": args.bound}
                try:
                    fn = exact_alpha_k if args.bound == "alpha" else exact_chi_k
                    rec["value"] = fn(item, args.k, budget)
                except BudgetExceededError as exc:
                    rec["value"] = "skipped"
                    rec["note"] = exc.note
                rec["ms"] = (time.perf_counter() - start) * 1000.0
                records.append(rec)
            report = {"config": {"k": args.k, "bound": args.bound, "oracle": True},
                      "records": records}
            _emit(render(report, args.format), args.out)
            return 2 if any("error" in r for r in records) else 0

        if args.command == "bench":
            expected_path = (Path(args.expected) if args.expected
                             else default_catalog_dir() / "expected_bounds.csv")
            expected = load_expected(expected_path)
            return bench(expected, catalog_dir)

        if args.command == "catalog":
            entries = load_catalog(catalog_dir)
            lines = [f"{'name':<18}{'n':>5}{'m':>6}{'d+1':>5}  regular"]
            for name, g in entries:
                spec = group_distinct(eigenvalues(g.adjacency))
                degs = g.degrees()
                lines.append(
                    f"{name:<18}{g.n:>5}{g.edge_count:>6}{spec.d + 1:>5}"
                    f"  {'yes' if degs.min() == degs.max() else 'no'}"
                )
            _emit("\n".join(lines) + "\n", args.out)
            return 0
    except KboundsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
