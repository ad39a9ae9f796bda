"""Constructors for the named graphs used by the catalog and tests.

Cubic graphs come from their LCF notation; the rest are explicit.  Every
construction is validated in the test suite by degree sequence and
spectrum rather than trusted by name.
"""

from __future__ import annotations

from .graphs import Graph, from_edges

__all__ = ["lcf_graph", "NAMED", "get"]


def lcf_graph(shifts: list[int], repeats: int, name: str | None = None) -> Graph:
    """Hamiltonian cubic graph from LCF notation [shifts]^repeats."""
    n = len(shifts) * repeats
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add((min(i, j), max(i, j)))
    return from_edges(n, edges, name)


def cycle(n: int, name: str | None = None) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], name or f"C{n}")


def path(n: int, name: str | None = None) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], name or f"P{n}")


def complete(n: int, name: str | None = None) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return from_edges(n, edges, name or f"K{n}")


def empty(n: int, name: str | None = None) -> Graph:
    return from_edges(n, [], name or f"E{n}")


def petersen() -> Graph:
    # Outer 5-cycle, inner pentagram, spokes.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges, "Petersen")


def coxeter() -> Graph:
    """Three heptagons with chord steps 1, 2, 3 plus a 7-vertex hub."""
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))            # a-cycle, step 1
        edges.append((7 + i, 7 + (i + 2) % 7))    # b-cycle, step 2
        edges.append((14 + i, 14 + (i + 3) % 7))  # c-cycle, step 3
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return from_edges(28, edges, "Coxeter")


def icosahedron() -> Graph:
    """Gyroelongated pentagonal bipyramid: two apexes and two 5-rings."""
    edges = [(0, 1 + i) for i in range(5)]
    edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    edges += [(1 + i, 6 + i) for i in range(5)]
    edges += [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    edges += [(11, 6 + i) for i in range(5)]
    return from_edges(12, edges, "Icosahedron")


def hexagon_hull_graph() -> Graph:
    """7-vertex graph whose six distinct (degree, 2*triangles) pairs form
    a convex hexagon, so no closed-walk constraint is redundant at k=3."""
    edges_1based = [
        (1, 2), (1, 6), (2, 3), (2, 5), (2, 7),
        (3, 4), (3, 5), (4, 5), (5, 6), (6, 7),
    ]
    return from_edges(7, [(u - 1, v - 1) for u, v in edges_1based], "HexagonHull7")


NAMED: dict[str, callable] = {
    "Petersen": petersen,
    "Heawood": lambda: lcf_graph([5, -5], 7, "Heawood"),
    "Coxeter": coxeter,
    "Icosahedron": icosahedron,
    "Hexahedron": lambda: lcf_graph([3, -3], 4, "Hexahedron"),
    "Dodecahedron": lambda: lcf_graph(
        [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2, "Dodecahedron"
    ),
    "Moebius-Kantor": lambda: lcf_graph([5, -5], 8, "Moebius-Kantor"),
    "Desargues": lambda: lcf_graph([5, -5, 9, -9], 5, "Desargues"),
    "Pappus": lambda: lcf_graph([5, 7, -7, 7, -7, -5], 3, "Pappus"),
    "Nauru": lambda: lcf_graph([5, -9, 7, -7, 9, -5], 4, "Nauru"),
    "Franklin": lambda: lcf_graph([5, -5], 6, "Franklin"),
    "Folkman": lambda: lcf_graph([5, -7, -7, 5], 5, "Folkman"),
    "Tutte-Coxeter": lambda: lcf_graph([-13, -9, 7, -7, 9, 13], 5, "Tutte-Coxeter"),
    "Frucht": lambda: lcf_graph(
        [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1, "Frucht"
    ),
    "HexagonHull7": hexagon_hull_graph,
}


def get(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError as exc:
        raise KeyError(f"unknown named graph {name!r}") from exc
