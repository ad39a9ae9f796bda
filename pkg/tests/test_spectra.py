import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbounds.spectra import Spectrum, eigenvalues, group_distinct, spectrum_of


def test_k3_spectrum(named):
    s = eigenvalues(named.complete(3).adjacency)
    assert np.allclose(s.values, [2, -1, -1])


def test_c4_spectrum(named):
    s = eigenvalues(named.cycle(4).adjacency)
    assert np.allclose(s.values, [2, 0, 0, -2], atol=1e-12)


def test_petersen_spectrum_and_grouping(named):
    s = eigenvalues(named.get("Petersen").adjacency)
    assert np.allclose(s.values, [3] + [1] * 5 + [-2] * 4)
    ds = group_distinct(s)
    assert ds.d == 2
    assert ds.mults == (1, 5, 4)
    assert ds.prefix == (0, 1, 6, 10)
    assert np.allclose(ds.thetas, [3, 1, -2])


def test_non_symmetric_rejected():
    with pytest.raises(ValueError, match="symmetric"):
        eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigenpair_residuals(catalog):
    for _, g in catalog:
        a = g.adjacency.astype(float)
        vals, vecs = np.linalg.eigh(a)
        norm = np.linalg.norm(a, 2)
        for lam, q in zip(vals, vecs.T):
            assert np.linalg.norm(a @ q - lam * q) <= 1e-8 * max(1.0, norm)
        ours = eigenvalues(a)
        assert np.allclose(ours.values, vals[::-1])


def test_grouping_merges_jitter():
    s = Spectrum((2.0, -1.0 - 1e-12, -1.0))
    ds = group_distinct(s, tol=1e-9)
    assert ds.mults == (1, 2)
    assert np.allclose(ds.thetas, [2.0, -1.0])


def test_single_vertex():
    ds = spectrum_of(np.zeros((1, 1)))
    assert ds.thetas == (0.0,) and ds.mults == (1,)


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=12))
@settings(max_examples=60, deadline=None)
def test_grouping_idempotent(values):
    s = Spectrum(tuple(sorted(values, reverse=True)))
    ds = group_distinct(s, tol=1e-6)
    again = group_distinct(Spectrum(ds.thetas), tol=1e-6)
    assert again.thetas == ds.thetas
    assert again.mults == tuple(1 for _ in ds.thetas)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=8))
@settings(max_examples=60, deadline=None)
def test_prefix_sums(mults):
    thetas = tuple(float(len(mults) - i) for i in range(len(mults)))
    values = []
    for t, m in zip(thetas, mults):
        values.extend([t] * m)
    ds = group_distinct(Spectrum(tuple(values)), tol=1e-9)
    assert ds.mults == tuple(mults)
    for i in range(len(mults) + 1):
        for j in range(i, len(mults) + 1):
            assert ds.weight(i, j) == sum(mults[i:j])


def test_trace_identities_small(named):
    for g in [named.get("Petersen"), named.complete(4), named.cycle(5)]:
        ds = spectrum_of(g.adjacency)
        tol = 1e-6 * max(1.0, 2 * g.edge_count)
        assert abs(sum(m * t for t, m in zip(ds.thetas, ds.mults))) < tol
        assert abs(sum(m * t * t for t, m in zip(ds.thetas, ds.mults))
                   - 2 * g.edge_count) < tol
