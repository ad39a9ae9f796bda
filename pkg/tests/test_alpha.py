import numpy as np
import pytest

from kbounds import diagonal_profile
from kbounds.alpha import (
    diagonal_rows_full,
    evaluate_bound,
    optimize_fixed_k,
    optimize_k1,
    optimize_k2,
    polynomial_profile,
    prune_diagonal_constraints,
)
from kbounds.feasibility import LE, LinearConstraintSystem, feasible
from kbounds.graphs import DiagonalProfile
from kbounds.polynomials import Polynomial
from kbounds.spectra import spectrum_of


def _prep(g, k=3):
    return spectrum_of(g.adjacency), diagonal_profile(g, k)


# -- evaluate_bound ----------------------------------------------------------


def test_evaluate_constant_on_edgeless(named):
    g = named.empty(4)
    spec, prof = _prep(g, 1)
    r = evaluate_bound(Polynomial((1.0, 0.0)), g, spec, prof)
    assert r.value == 4 and r.negative_set == frozenset()


def test_evaluate_heawood_quadratic(named):
    g = named.get("Heawood")
    spec, prof = _prep(g)
    r = evaluate_bound(Polynomial((-3.0, 0.0, 1.0)), g, spec, prof)
    assert r.value == 2
    profile = polynomial_profile(Polynomial((-3.0, 0.0, 1.0)), spec, prof)
    assert profile.w == profile.W == 0.0  # 3-regular: d(v) - 3 vanishes


def test_evaluate_c5(named):
    g = named.cycle(5)
    spec, prof = _prep(g)
    r = evaluate_bound(Polynomial((-2.0, 1.0, 1.0)), g, spec, prof)
    assert r.value == 1


def test_evaluate_degree_mismatch(named):
    g = named.cycle(5)
    spec, prof = _prep(g, 1)
    with pytest.raises(ValueError, match="degree"):
        evaluate_bound(Polynomial((0.0, 0.0, 1.0)), g, spec, prof)


def test_lambda_profile_fields(named):
    g = named.get("Petersen")
    spec, prof = _prep(g)
    p = Polynomial((0.0, 1.0))
    profile = polynomial_profile(p, spec, prof)
    # [2, n] excludes one copy of theta_0 = 3: extremes over {1, -2}
    assert np.isclose(profile.Lambda, 1.0)
    assert np.isclose(profile.lambda_small, -2.0)


# -- closed forms ------------------------------------------------------------


def test_k1_examples(named):
    assert optimize_k1(spectrum_of(named.complete(2).adjacency)).value == 1
    assert optimize_k1(spectrum_of(named.get("Petersen").adjacency)).value == 4
    assert optimize_k1(spectrum_of(named.cycle(4).adjacency)).value == 3


def test_k2_examples(named):
    for name, expect in [("Heawood", 2), ("Coxeter", 7), ("Icosahedron", 4)]:
        spec, prof = _prep(named.get(name))
        assert optimize_k2(spec, prof).value == expect
    spec, prof = _prep(named.cycle(5))
    r = optimize_k2(spec, prof)
    assert r.value == 1
    # witness certifies: negative set weight matches
    assert r.value == spec.n - sum(spec.mults[j] for j in r.negative_set)


def test_k2_edgeless(named):
    spec, prof = _prep(named.empty(5), 2)
    r = optimize_k2(spec, prof)
    assert r.value == 5 and r.witness.coeffs[0] == 1.0


# -- fixed k -----------------------------------------------------------------


def test_fixed_k_table_values(named):
    for name, expect in [("Heawood", 1), ("Dodecahedron", 4)]:
        spec, prof = _prep(named.get(name))
        assert optimize_fixed_k(spec, prof, 3).value == expect


def test_fixed_k_out_of_range(named):
    spec, prof = _prep(named.cycle(5))
    with pytest.raises(ValueError):
        optimize_fixed_k(spec, prof, 0)
    with pytest.raises(ValueError):
        optimize_fixed_k(spec, prof, 6)


def test_cross_method_identity_named(named):
    for name in ["Petersen", "Heawood", "Frucht", "HexagonHull7"]:
        g = named.get(name)
        spec, prof = _prep(g)
        assert optimize_k1(spec).value == optimize_fixed_k(spec, prof, 1).value
        assert optimize_k2(spec, prof).value == optimize_fixed_k(spec, prof, 2).value


def test_witness_invariants(named, random_corpus):
    graphs = [named.get("Heawood"), named.get("Petersen")] + random_corpus[:30]
    for g in graphs:
        spec, prof = _prep(g)
        for result in (optimize_k1(spec), optimize_k2(spec, prof),
                       optimize_fixed_k(spec, prof, 3)):
            assert 1 <= result.value <= spec.n
            assert result.value == spec.n - sum(spec.mults[j] for j in result.negative_set)
            # witness certifies a bound at least as good on the w-side
            again = evaluate_bound(
                Polynomial(result.witness.coeffs + (0.0,) * (3 - result.witness.k)),
                g, spec, prof)
            assert again.value <= result.value
            # certified-negative values sit at margin <= -1 (up to fp slack)
            for j in result.negative_set:
                assert result.witness(spec.thetas[j]) <= -1.0 + 1e-6


def test_shift_invariance_mechanism(named, random_corpus):
    for g in [named.get("Heawood")] + random_corpus[:20]:
        spec, prof = _prep(g)
        result = optimize_fixed_k(spec, prof, 2)
        p = Polynomial(result.witness.coeffs)
        diag = [sum(p.coeffs[i] * row[i] for i in range(len(p.coeffs)))
                for row in prof.diag]
        gamma = min(diag)
        assert gamma >= -1e-9
        shifted = p.shifted(gamma)
        sdiag = [sum(shifted.coeffs[i] * row[i] for i in range(len(p.coeffs)))
                 for row in prof.diag]
        assert abs(min(sdiag)) <= 1e-9
        for j in range(spec.d + 1):
            if p(spec.thetas[j]) < 0:
                assert shifted(spec.thetas[j]) < 1e-12


# -- diagonal constraint pruning --------------------------------------------


def test_prune_k1():
    prof = DiagonalProfile(k=1, diag=((1, 0), (1, 0)), d_min=1, d_max=1,
                           hull_points=((1, 0), (1, 0)))
    rows = prune_diagonal_constraints(prof, 1)
    assert len(rows) == 1 and rows[0].coeffs == (1.0, 0.0)


def test_prune_k2_extremes_only():
    prof = DiagonalProfile(k=2, diag=((1, 0, 2), (1, 0, 3), (1, 0, 4)),
                           d_min=2, d_max=4,
                           hull_points=((2, 0), (3, 0), (4, 0)))
    rows = prune_diagonal_constraints(prof, 2)
    assert [r.coeffs for r in rows] == [(1.0, 0.0, 2.0), (1.0, 0.0, 4.0)]


def test_prune_k3_hexagon(named):
    g = named.get("HexagonHull7")
    prof = diagonal_profile(g, 3)
    assert sorted(set(prof.hull_points)) == [(2, 0), (2, 2), (3, 0), (3, 4), (4, 2), (4, 4)]
    rows = prune_diagonal_constraints(prof, 3)
    assert len(rows) == 6
    hull = {(r.coeffs[2], r.coeffs[3]) for r in rows}
    assert hull == {(2.0, 0.0), (4.0, 2.0), (3.0, 4.0), (2.0, 2.0), (4.0, 4.0), (3.0, 0.0)}


def test_prune_k3_regular_triangle_free(named):
    prof = diagonal_profile(named.get("Petersen"), 3)
    assert len(prune_diagonal_constraints(prof, 3)) == 1


def test_hull_rows_nonredundant(named):
    g = named.get("HexagonHull7")
    prof = diagonal_profile(g, 3)
    rows = prune_diagonal_constraints(prof, 3)
    for i, row in enumerate(rows):
        sys = LinearConstraintSystem(4)
        for j, other in enumerate(rows):
            if j != i:
                sys.rows.append(other)
        sys.add(row.coeffs, LE, -1.0)  # violate the removed row
        assert feasible(sys) is not None, f"row {i} is implied by the others"


def test_pruning_lossless_on_random(random_corpus):
    for g in random_corpus[:40]:
        spec = spectrum_of(g.adjacency)
        prof = diagonal_profile(g, 3)
        for k in (2, 3):
            a = optimize_fixed_k(spec, prof, k, prune=True).value
            b = optimize_fixed_k(spec, prof, k, prune=False).value
            assert a == b, f"{g.name} k={k}: pruned {a} != full {b}"


def test_diagonal_rows_full_dedups(named):
    prof = diagonal_profile(named.get("Petersen"), 3)
    assert len(diagonal_rows_full(prof, 3)) == 1
    prof = diagonal_profile(named.get("HexagonHull7"), 3)
    assert len(diagonal_rows_full(prof, 3)) == 6


def test_fixed_k_monotone_in_k(named):
    # richer polynomial families can only improve the bound
    for name in ["Petersen", "Heawood", "HexagonHull7"]:
        g = named.get(name)
        spec = spectrum_of(g.adjacency)
        prof = diagonal_profile(g, 5)
        values = [optimize_fixed_k(spec, prof, k).value for k in range(1, 6)]
        assert values == sorted(values, reverse=True)
        assert values[-1] >= 1


def test_fixed_k45_soundness(named):
    from kbounds.oracles import exact_alpha_k

    for name in ["Petersen", "Hexahedron"]:
        g = named.get(name)
        spec = spectrum_of(g.adjacency)
        prof = diagonal_profile(g, 5)
        for k in (4, 5):
            assert optimize_fixed_k(spec, prof, k).value >= exact_alpha_k(g, k)
