import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbounds import (
    diagonal_profile,
    graph_power,
    is_k_partially_walk_regular,
    load_catalog,
    parse_graph,
    to_graph6,
)
from kbounds.errors import CatalogError, GraphFormatError
from kbounds.graphs import from_edges
from kbounds.spectra import eigenvalues


def test_graph6_triangle():
    g = parse_graph("Bw", "graph6")
    assert g.n == 3
    assert g.edges == {(0, 1), (0, 2), (1, 2)}


def test_graph6_matches_reference_codec():
    nx = pytest.importorskip("networkx")
    rng = np.random.RandomState(7)
    for _ in range(25):
        n = rng.randint(1, 20)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random_sample() < 0.4]
        g = from_edges(n, edges)
        line = to_graph6(g)
        ref = nx.from_graph6_bytes(line.encode())
        assert set(ref.nodes) == set(range(n))
        assert {tuple(sorted(e)) for e in ref.edges} == set(g.edges)
        # and our parser agrees with the reference encoder
        ours = parse_graph(nx.to_graph6_bytes(ref, header=False).decode().strip())
        assert ours.edges == g.edges


@given(st.integers(1, 30), st.random_module())
@settings(max_examples=40, deadline=None)
def test_graph6_round_trip(n, rnd):
    rng = np.random.RandomState(abs(hash(rnd)) % (2 ** 31))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random_sample() < 0.3]
    g = from_edges(n, edges)
    back = parse_graph(to_graph6(g))
    assert back.n == g.n and back.edges == g.edges


def test_edge_list_k2():
    g = parse_graph("n=2\n0 1", "edge_list")
    assert g.n == 2 and g.edges == {(0, 1)}


@pytest.mark.parametrize("text,match", [
    ("n=3\n0 0", "self-loop"),
    ("n=3\n0 1\n1 0", "duplicate"),
    ("n=2\n0 5", "out of range"),
    ("0 1", "header"),
    ("n=2\n0", "expected"),
])
def test_edge_list_errors(text, match):
    with pytest.raises(GraphFormatError, match=match):
        parse_graph(text, "edge_list")


def test_graph6_errors_report_offsets():
    with pytest.raises(GraphFormatError, match="byte"):
        parse_graph("B" + chr(200), "graph6")
    with pytest.raises(GraphFormatError):
        parse_graph("B", "graph6")  # truncated body


def test_diagonal_profile_small(named):
    k3 = named.complete(3)
    prof = diagonal_profile(k3, 3)
    assert all(row == (1, 0, 2, 2) for row in prof.diag)
    k2 = named.complete(2)
    prof = diagonal_profile(k2, 2)
    assert all(row == (1, 0, 1) for row in prof.diag)
    assert prof.d_min == prof.d_max == 1
    pet = named.get("Petersen")
    prof = diagonal_profile(pet, 3)
    assert all(row == (1, 0, 3, 0) for row in prof.diag)


def test_diagonal_profile_matches_matrix_powers(named):
    g = named.get("Frucht")
    prof = diagonal_profile(g, 5)
    a = g.adjacency
    power = np.eye(g.n, dtype=np.int64)
    for i in range(6):
        expected = np.diag(power)
        assert [row[i] for row in prof.diag] == list(expected)
        power = power @ a


def test_diagonal_trace_identities(named):
    for g in [named.get("Petersen"), named.get("Frucht"), named.cycle(5),
              named.complete(4), named.get("HexagonHull7")]:
        prof = diagonal_profile(g, 3)
        assert sum(row[2] for row in prof.diag) == 2 * g.edge_count
        a3 = np.linalg.matrix_power(g.adjacency, 3)
        assert sum(row[3] for row in prof.diag) == np.trace(a3)


def test_graph_power(named):
    pet = named.get("Petersen")
    p2 = graph_power(pet, 2)
    assert p2.edge_count == 45  # K_10
    c6 = named.cycle(6)
    c62 = graph_power(c6, 2)
    assert sorted(c62.degrees()) == [4] * 6
    assert graph_power(pet, 1) is pet


def test_graph_power_monotone(named):
    g = named.get("Frucht")
    prev = graph_power(g, 1)
    for k in range(2, 5):
        cur = graph_power(g, k)
        assert prev.edges <= cur.edges
        prev = cur


def test_walk_regularity(named):
    assert is_k_partially_walk_regular(named.get("Petersen"), 3)
    assert not is_k_partially_walk_regular(named.path(3), 2)
    fr = named.get("Frucht")
    assert is_k_partially_walk_regular(fr, 2)
    assert not is_k_partially_walk_regular(fr, 3)


def test_walk_regularity_downward(named, random_corpus):
    for g in random_corpus[:25]:
        for k in range(3, 0, -1):
            if is_k_partially_walk_regular(g, k):
                assert is_k_partially_walk_regular(g, k - 1)


def test_load_catalog_shipped(catalog):
    names = [name for name, _ in catalog]
    assert len(names) == 12 and "Heawood" in names


def test_catalog_heawood_validates(catalog):
    g = dict(catalog)["Heawood"]
    assert g.n == 14 and sorted(g.degrees()) == [3] * 14
    vals = np.array(eigenvalues(g.adjacency).values)
    expected = np.array([3.0] + [np.sqrt(2)] * 6 + [-np.sqrt(2)] * 6 + [-3.0])
    assert np.allclose(vals, expected, atol=1e-9)


def test_load_catalog_errors(tmp_path):
    with pytest.raises(CatalogError, match="manifest"):
        load_catalog(tmp_path)
    (tmp_path / "manifest.csv").write_text("name,file\n")
    assert load_catalog(tmp_path) == []
    (tmp_path / "manifest.csv").write_text("name,file\nGhost,ghost.g6\n")
    with pytest.raises(CatalogError, match="ghost.g6"):
        load_catalog(tmp_path)


def test_named_constructions_validate(named):
    nx = pytest.importorskip("networkx")
    builders = {
        "Heawood": nx.heawood_graph,
        "Desargues": nx.desargues_graph,
        "Moebius-Kantor": nx.moebius_kantor_graph,
        "Pappus": nx.pappus_graph,
        "Dodecahedron": nx.dodecahedral_graph,
        "Icosahedron": nx.icosahedral_graph,
        "Frucht": nx.frucht_graph,
        "Hexahedron": nx.hypercube_graph and (lambda: nx.cubical_graph()),
    }
    for name, builder in builders.items():
        ours = named.get(name)
        ref = builder()
        assert ours.n == ref.number_of_nodes()
        assert ours.edge_count == ref.number_of_edges()
        ours_spec = np.array(eigenvalues(ours.adjacency).values)
        ref_adj = nx.to_numpy_array(ref)
        ref_spec = np.sort(np.linalg.eigvalsh(ref_adj))[::-1]
        assert np.allclose(ours_spec, ref_spec, atol=1e-8)


def test_coxeter_spectrum(named):
    # 3-regular on 28 vertices; distinct spectrum 3, 2, sqrt(2)-1, -1, -sqrt(2)-1
    g = named.get("Coxeter")
    assert g.n == 28 and sorted(g.degrees()) == [3] * 28
    vals = np.array(eigenvalues(g.adjacency).values)
    s2 = np.sqrt(2)
    expected = np.concatenate([
        [3.0], [2.0] * 8, [s2 - 1] * 6, [-1.0] * 7, [-s2 - 1] * 6,
    ])
    assert np.allclose(vals, np.sort(expected)[::-1], atol=1e-9)


def test_graph6_long_form_round_trip():
    nx = pytest.importorskip("networkx")
    rng = np.random.RandomState(13)
    for n in (63, 80):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random_sample() < 0.05]
        g = from_edges(n, edges)
        line = to_graph6(g)
        assert line.startswith("~")  # long-form size prefix
        back = parse_graph(line)
        assert back.n == n and back.edges == g.edges
        ref = nx.from_graph6_bytes(line.encode())
        assert {tuple(sorted(e)) for e in ref.edges} == set(g.edges)


def test_graph6_optional_header():
    g = parse_graph(">>graph6<<Bw", "graph6")
    assert g.n == 3 and len(g.edges) == 3
