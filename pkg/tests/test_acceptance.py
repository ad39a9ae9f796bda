"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import time
from fractions import Fraction

import pytest

from kbounds import diagonal_profile, is_k_partially_walk_regular
from kbounds.alpha import (
    diagonal_rows_full,
    optimize_fixed_k,
    optimize_k1,
    optimize_k2,
    prune_diagonal_constraints,
)
from kbounds.chi import (
    first_bound,
    optimize_second_fixed_k,
    optimize_second_k1,
    optimize_second_k2,
)
from kbounds.errors import BudgetExceededError, UndefinedBoundError
from kbounds.feasibility import LE, LinearConstraintSystem, feasible
from kbounds.milp import build_alpha_models, build_chi_models, solve_reference
from kbounds.oracles import exact_alpha_k, exact_chi_k
from kbounds.spectra import spectrum_of

K2_EXPECTED = {
    "Heawood": 2, "Coxeter": 7, "Icosahedron": 4, "Hexahedron": 2,
    "Dodecahedron": 4, "Moebius-Kantor": 6, "Desargues": 6, "Pappus": 7,
    "Nauru": 8, "Franklin": 4, "Folkman": 5, "Tutte-Coxeter": 10,
}
K3_EXPECTED = {
    "Heawood": 1, "Coxeter": 6, "Dodecahedron": 4, "Hexahedron": 1,
    "Icosahedron": 1, "Pappus": 7, "Desargues": 5, "Nauru": 7,
    "Moebius-Kantor": 5,
}


def _report(num: int, label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    tail = f" ({detail})" if detail else ""
    print(f"[{status}] criterion {num}: {label}{tail}")
    assert ok, f"criterion {num} failed: {label} {tail}"


def test_criterion_1_k2_table(catalog_prepared):
    start = time.perf_counter()
    wrong = []
    prepared = dict(catalog_prepared)
    for name, expect in K2_EXPECTED.items():
        pg = prepared[name]
        value = optimize_k2(pg.spec, pg.prof).value
        if value != expect:
            wrong.append((name, value, expect))
    elapsed = time.perf_counter() - start
    _report(1, "k=2 bound table reproduction",
            not wrong and elapsed < 10.0,
            f"{len(K2_EXPECTED)} graphs in {elapsed:.2f}s, mismatches: {wrong}")


def test_criterion_2_k3_table(catalog_prepared):
    start = time.perf_counter()
    wrong = []
    prepared = dict(catalog_prepared)
    for name, expect in K3_EXPECTED.items():
        pg = prepared[name]
        value = optimize_fixed_k(pg.spec, pg.prof, 3).value
        if value != expect:
            wrong.append((name, value, expect))
    elapsed = time.perf_counter() - start
    _report(2, "k=3 bound table reproduction",
            not wrong and elapsed < 60.0,
            f"{len(K3_EXPECTED)} graphs in {elapsed:.2f}s, mismatches: {wrong}")


def test_criterion_3_model_equivalence(catalog_prepared):
    mismatches = []
    checked = 0
    for name, pg in catalog_prepared:
        if pg.spec.d + 1 > 12:
            continue
        for k in (2, 3):
            prof = diagonal_profile(pg.graph, k)
            unified = solve_reference(build_alpha_models(pg.spec, prof, "unified"))[0]
            per_vertex = {}
            for u in range(pg.graph.n):
                sig = prof.diag[u]
                if sig not in per_vertex:
                    per_vertex[sig] = solve_reference(
                        build_alpha_models(pg.spec, prof, "per_vertex", u=u))[0]
            values = set(per_vertex.values())
            # catalog graphs are walk-regular: every vertex gives one value,
            # so max over u, min over u, and the unified optimum all agree
            if values != {unified}:
                mismatches.append((name, k, "alpha", sorted(values), unified))
            if not is_k_partially_walk_regular(pg.graph, k):
                continue
            uni = solve_reference(build_chi_models(pg.spec, pg.graph.n, k, "unified"))
            best = None
            for ell in range(1, pg.graph.n):
                r = solve_reference(build_chi_models(pg.spec, pg.graph.n, k,
                                                     "fixed_ell", ell=ell))
                if r is not None and (best is None or r[0] > best):
                    best = r[0]
            if uni is None or best != uni[0]:
                mismatches.append((name, k, "chi", best, uni))
            checked += 1
    _report(3, "model reformulations agree via the reference solver",
            not mismatches, f"{checked} chi cases, mismatches: {mismatches}")


def test_criterion_4_redundancy(catalog_prepared, named):
    problems = []
    for name, pg in catalog_prepared:
        for k in (2, 3):
            a = optimize_fixed_k(pg.spec, pg.prof, k, prune=True).value
            b = optimize_fixed_k(pg.spec, pg.prof, k, prune=False).value
            if a != b:
                problems.append((name, k, a, b))

    hex7 = named.get("HexagonHull7")
    prof = diagonal_profile(hex7, 3)
    hull_rows = prune_diagonal_constraints(prof, 3)
    if len(hull_rows) != 6:
        problems.append(("hull size", len(hull_rows)))
    for i, row in enumerate(hull_rows):
        sys = LinearConstraintSystem(4)
        for j, other in enumerate(hull_rows):
            if j != i:
                sys.rows.append(other)
        sys.add(row.coeffs, LE, -1.0)
        if feasible(sys) is None:
            problems.append(("redundant hull row", i))
    _report(4, "constraint pruning is lossless and the hexagon hull is tight",
            not problems, f"problems: {problems}")


def test_criterion_5_soundness(catalog_prepared, random_prepared):
    violations = []
    skipped = 0
    corpus = [pg for _, pg in catalog_prepared] + list(random_prepared)
    for pg in corpus:
        g = pg.graph
        if g.n > 30:
            continue
        bounds = {
            1: optimize_k1(pg.spec).value,
            2: optimize_k2(pg.spec, pg.prof).value,
            3: optimize_fixed_k(pg.spec, pg.prof, 3).value,
        }
        for k in (1, 2, 3):
            fixed = optimize_fixed_k(pg.spec, pg.prof, k).value
            try:
                exact = exact_alpha_k(g, k)
            except BudgetExceededError:
                skipped += 1
                continue
            if bounds[k] < exact or fixed < exact:
                violations.append((g.name, k, bounds[k], fixed, exact))
        for k in (1, 2):
            if not is_k_partially_walk_regular(g, k):
                continue
            try:
                chi_exact = exact_chi_k(g, k)
            except BudgetExceededError:
                skipped += 1
                continue
            try:
                if k == 1:
                    nu = optimize_second_k1(pg.spec).value
                else:
                    nu = optimize_second_k2(pg.spec, g.edge_count, g.n).value
                if nu > chi_exact:
                    violations.append((g.name, k, "chi", nu, chi_exact))
            except UndefinedBoundError:
                pass
            lower = first_bound(optimize_fixed_k(pg.spec, pg.prof, k), g.n)
            if lower > chi_exact:
                violations.append((g.name, k, "chi_first", lower, chi_exact))
    _report(5, "bounds are sound against the exact oracles",
            not violations,
            f"{len(corpus)} graphs, {skipped} oracle skips, violations: {violations}")


def test_criterion_6_cross_method(full_corpus_prepared):
    mismatches = []
    for pg in full_corpus_prepared:
        g = pg.graph
        if optimize_k1(pg.spec).value != optimize_fixed_k(pg.spec, pg.prof, 1).value:
            mismatches.append((g.name, "alpha k1"))
        if optimize_k2(pg.spec, pg.prof).value != optimize_fixed_k(pg.spec, pg.prof, 2).value:
            mismatches.append((g.name, "alpha k2"))
        for k in (1, 2):
            if not is_k_partially_walk_regular(g, k):
                continue
            try:
                special = (optimize_second_k1(pg.spec).value if k == 1 else
                           optimize_second_k2(pg.spec, g.edge_count, g.n).value)
            except UndefinedBoundError:
                special = None
            try:
                generic = optimize_second_fixed_k(pg.spec, k).value
            except UndefinedBoundError:
                generic = None
            if special != generic:
                mismatches.append((g.name, f"chi k{k}", special, generic))
    _report(6, "specialized optimizers agree with fixed-k enumeration",
            not mismatches,
            f"{len(full_corpus_prepared)} graphs, mismatches: {mismatches}")


def test_criterion_7_chi_derivations(named):
    pet = named.get("Petersen")
    hea = named.get("Heawood")
    pspec = spectrum_of(pet.adjacency)
    hspec = spectrum_of(hea.adjacency)
    ok = True
    detail = []
    nu2_pet = optimize_second_k2(pspec, pet.edge_count, pet.n).value
    chi2_pet = exact_chi_k(pet, 2)
    detail.append(f"nu2(Petersen)={nu2_pet}, chi2={chi2_pet}")
    ok &= nu2_pet == Fraction(10) == chi2_pet
    nu2_hea = optimize_second_k2(hspec, hea.edge_count, hea.n).value
    chi2_hea = exact_chi_k(hea, 2)
    detail.append(f"nu2(Heawood)={nu2_hea}, chi2={chi2_hea}")
    ok &= nu2_hea == Fraction(7) == chi2_hea
    nu1_pet = optimize_second_k1(pspec).value
    detail.append(f"nu1(Petersen)={nu1_pet}")
    ok &= nu1_pet == Fraction(5, 2)
    _report(7, "chi derivations match the exact coloring oracle",
            ok, "; ".join(detail))


def test_criterion_8_trace_identities(full_corpus_prepared):
    import numpy as np

    bad = []
    for pg in full_corpus_prepared:
        g = pg.graph
        spec = pg.spec
        tol = 1e-6 * max(1.0, 2.0 * g.edge_count)
        t1 = sum(m * t for t, m in zip(spec.thetas, spec.mults))
        t2 = sum(m * t * t for t, m in zip(spec.thetas, spec.mults))
        t3 = sum(m * t ** 3 for t, m in zip(spec.thetas, spec.mults))
        triangles = int(np.trace(np.linalg.matrix_power(g.adjacency, 3))) // 6
        if abs(t1) > tol or abs(t2 - 2 * g.edge_count) > tol or abs(t3 - 6 * triangles) > tol:
            bad.append((g.name, t1, t2 - 2 * g.edge_count, t3 - 6 * triangles))
    _report(8, "spectral trace identities hold on the corpus",
            not bad, f"{len(full_corpus_prepared)} graphs, violations: {bad}")
