"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three hot kernels on representative workloads and checks that
both backends return identical results.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kbounds import _kernels_py
from kbounds import diagonal_profile, graph_power, named
from kbounds.alpha import optimize_fixed_k
from kbounds.spectra import spectrum_of

try:
    from kbounds import _core
except ImportError:
    _core = None


def _timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _masks(g) -> np.ndarray:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return np.array(masks, dtype=np.uint64)


def _random_masks(seed: int, n: int, p: float) -> np.ndarray:
    rng = np.random.RandomState(seed)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random_sample() < p:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return np.array(masks, dtype=np.uint64)


def _feasibility_workload(impl) -> int:
    """Unpruned k=3 negative-set enumeration over the whole catalog."""
    import kbounds.kernels as kernels

    old = kernels._impl
    kernels._impl = impl
    try:
        total = 0
        for name in ("Heawood", "Coxeter", "Icosahedron", "Hexahedron",
                     "Dodecahedron", "Moebius-Kantor", "Desargues", "Pappus",
                     "Nauru", "Franklin", "Folkman", "Tutte-Coxeter"):
            g = named.get(name)
            spec = spectrum_of(g.adjacency)
            prof = diagonal_profile(g, 3)
            total += optimize_fixed_k(spec, prof, 3, prune=False).value
            total += optimize_fixed_k(spec, prof, 2, prune=False).value
        return total
    finally:
        kernels._impl = old


def _mis_workload(impl) -> int:
    total = 0
    for name in ("Coxeter", "Tutte-Coxeter", "Dodecahedron", "Folkman"):
        g = named.get(name)
        total += impl.mis_size(_masks(g), g.n)
        g2 = graph_power(g, 2)
        total += impl.mis_size(_masks(g2), g2.n)
    for seed in range(20):
        n = 30 + 5 * (seed % 6)
        total += impl.mis_size(_random_masks(seed, n, 0.2 + 0.03 * (seed % 5)), n)
    return total


def _coloring_workload(impl) -> int:
    total = 0
    for name, k in (("Heawood", 2), ("Dodecahedron", 2), ("Folkman", 2),
                    ("Moebius-Kantor", 2), ("Pappus", 2), ("Desargues", 3)):
        g = graph_power(named.get(name), k)
        total += impl.chromatic_number(_masks(g), g.n)
    for seed in range(15):
        n = 24 + 2 * (seed % 5)
        total += impl.chromatic_number(_random_masks(100 + seed, n, 0.5), n)
    return total


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _core is None:
        print("compiled kernels unavailable; build the extension first")
        return 1

    workloads = [
        ("lp feasibility (fixed-k enumeration)", _feasibility_workload),
        ("max independent set (branch & bound)", _mis_workload),
        ("exact coloring (iterative deepening)", _coloring_workload),
    ]
    print(f"{'kernel':<40}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>9}")
    for label, work in workloads:
        pure_result = work(_kernels_py)
        comp_result = work(_core)
        if pure_result != comp_result:
            print(f"{label:<40} BACKEND DISAGREEMENT: {pure_result} vs {comp_result}")
            return 1
        t_pure = _timeit(lambda: work(_kernels_py), args.repeat)
        t_comp = _timeit(lambda: work(_core), args.repeat)
        print(f"{label:<40}{t_pure:>12.4f}{t_comp:>14.4f}{t_pure / t_comp:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
