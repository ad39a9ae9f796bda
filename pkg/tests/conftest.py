"""Shared fixtures: named graphs, the shipped catalog, and a seeded
random corpus reused across soundness and cross-method suites."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest

from kbounds import diagonal_profile, load_catalog
from kbounds import named as named_mod
from kbounds.cli import default_catalog_dir
from kbounds.graphs import Graph, from_edges
from kbounds.spectra import spectrum_of

CATALOG_NAMES = [
    "Heawood", "Coxeter", "Icosahedron", "Hexahedron", "Dodecahedron",
    "Moebius-Kantor", "Desargues", "Pappus", "Nauru", "Franklin",
    "Folkman", "Tutte-Coxeter",
]

RANDOM_SEED = 271828
RANDOM_COUNT = 200


def random_graph(rng: np.random.RandomState, n: int, p: float, name: str) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random_sample() < p
    ]
    return from_edges(n, edges, name)


def make_random_corpus() -> list[Graph]:
    rng = np.random.RandomState(RANDOM_SEED)
    graphs = []
    for i in range(RANDOM_COUNT):
        p = 0.3 if i % 2 == 0 else 0.5
        n = 4 + (i % 9)  # 4..12
        graphs.append(random_graph(rng, n, p, f"rand{i}_n{n}_p{p}"))
    return graphs


@dataclass
class PreparedGraph:
    graph: Graph
    spec: object
    prof: object


def prepare(g: Graph) -> PreparedGraph:
    return PreparedGraph(g, spectrum_of(g.adjacency), diagonal_profile(g, 3))


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(default_catalog_dir())


@pytest.fixture(scope="session")
def catalog_prepared(catalog):
    return [(name, prepare(g)) for name, g in catalog]


@pytest.fixture(scope="session")
def random_corpus():
    return make_random_corpus()


@pytest.fixture(scope="session")
def random_prepared(random_corpus):
    return [prepare(g) for g in random_corpus]


@pytest.fixture(scope="session")
def named():
    return named_mod


@pytest.fixture(scope="session")
def full_corpus_prepared(catalog_prepared, random_prepared):
    """Catalog + named fixtures + the random corpus, spectra precomputed."""
    extras = [named_mod.get("Petersen"), named_mod.get("Frucht"),
              named_mod.get("HexagonHull7"),
              named_mod.cycle(4), named_mod.cycle(5), named_mod.cycle(6),
              named_mod.complete(2), named_mod.complete(4), named_mod.path(3)]
    out = [pg for _, pg in catalog_prepared]
    out.extend(prepare(g) for g in extras)
    out.extend(random_prepared)
    return out
