"""Pure-Python kernels (numpy-vectorized fallback for the compiled core).

Three hot routines live here and in the Cython twin ``_core``:

* ``feasible_point``  - basic-point enumeration for small linear systems,
* ``mis_size``        - maximum independent set by branch and bound,
* ``chromatic_number``- exact coloring by iterative deepening.

Both implementations follow the same candidate order and pivoting rules
so they return the same decisions on the same inputs.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

SINGULAR_TOL = 1e-12
_SUBSET_CHUNK = 4096


def _batched_gauss(mats: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Partial-pivot Gaussian elimination over a (B, d, d) stack.

    Returns (solutions: (B, d), ok: (B,) bool). Pivot magnitude below
    SINGULAR_TOL marks the system singular.
    """
    a = mats.copy()
    b = rhs.copy()
    bsz, d, _ = a.shape
    ok = np.ones(bsz, dtype=bool)
    rows = np.arange(bsz)
    for col in range(d):
        piv = np.abs(a[:, col:, col]).argmax(axis=1) + col
        swap = piv != col
        if swap.any():
            sel = rows[swap]
            pr = piv[swap]
            tmp = a[sel, col, :].copy()
            a[sel, col, :] = a[sel, pr, :]
            a[sel, pr, :] = tmp
            tmpb = b[sel, col].copy()
            b[sel, col] = b[sel, pr]
            b[sel, pr] = tmpb
        pivot = a[:, col, col]
        ok &= np.abs(pivot) >= SINGULAR_TOL
        safe = np.where(ok, pivot, 1.0)
        if col + 1 < d:
            factor = a[:, col + 1 :, col] / safe[:, None]
            a[:, col + 1 :, :] -= factor[:, :, None] * a[:, col, :][:, None, :]
            b[:, col + 1 :] -= factor * b[:, col][:, None]
    x = np.zeros_like(b)
    for col in range(d - 1, -1, -1):
        acc = b[:, col] - (a[:, col, col + 1 :] * x[:, col + 1 :]).sum(axis=1)
        x[:, col] = acc / np.where(ok, a[:, col, col], 1.0)
    return x, ok


def _satisfies(points: np.ndarray, lhs: np.ndarray, rel: np.ndarray,
               rhs: np.ndarray, slack: float) -> np.ndarray:
    """Boolean mask of points satisfying every row within slack."""
    vals = points @ lhs.T
    diff = vals - rhs[None, :]
    ge = diff >= -slack
    le = diff <= slack
    per_row = np.where(rel[None, :] > 0, ge, np.where(rel[None, :] < 0, le, ge & le))
    return per_row.all(axis=1)


def feasible_point(gen_normals: np.ndarray, gen_rhs: np.ndarray,
                   test_lhs: np.ndarray, test_rel: np.ndarray, test_rhs: np.ndarray,
                   extra_points: np.ndarray, slack: float) -> np.ndarray | None:
    """First basic point satisfying the test system, or None.

    Candidates are the intersections of dim-subsets of the generator
    hyperplanes, in lexicographic subset order, followed by the extra
    points; the first candidate passing every test row wins.
    """
    gen_normals = np.ascontiguousarray(gen_normals, dtype=np.float64)
    gen_rhs = np.ascontiguousarray(gen_rhs, dtype=np.float64)
    test_lhs = np.ascontiguousarray(test_lhs, dtype=np.float64)
    test_rhs = np.ascontiguousarray(test_rhs, dtype=np.float64)
    rel = np.ascontiguousarray(test_rel, dtype=np.int8)
    dim = gen_normals.shape[1]
    h = gen_normals.shape[0]

    if h >= dim:
        combo_iter = combinations(range(h), dim)
        while True:
            chunk = []
            for _ in range(_SUBSET_CHUNK):
                nxt = next(combo_iter, None)
                if nxt is None:
                    break
                chunk.append(nxt)
            if not chunk:
                break
            idx = np.array(chunk, dtype=np.intp)
            mats = gen_normals[idx]
            rhs = gen_rhs[idx]
            pts, ok = _batched_gauss(mats, rhs)
            good = ok & _satisfies(pts, test_lhs, rel, test_rhs, slack)
            hits = np.flatnonzero(good)
            if hits.size:
                return pts[hits[0]].copy()

    if extra_points.size:
        pts = np.ascontiguousarray(extra_points, dtype=np.float64)
        good = _satisfies(pts, test_lhs, rel, test_rhs, slack)
        hits = np.flatnonzero(good)
        if hits.size:
            return pts[hits[0]].copy()
    return None


# ---------------------------------------------------------------------------
# Maximum independent set
# ---------------------------------------------------------------------------


def _clique_cover_bound(p: int, masks: list[int]) -> int:
    """Greedy clique cover of the candidate set: number of cliques."""
    cliques: list[int] = []
    rest = p
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        placed = False
        for i, c in enumerate(cliques):
            if c & ~masks[v] == 0:
                cliques[i] = c | (1 << v)
                placed = True
                break
        if not placed:
            cliques.append(1 << v)
    return len(cliques)


def mis_size(neighbor_masks, n: int, max_nodes: int = 0) -> int:
    """Maximum independent set size; raises RuntimeError past max_nodes."""
    masks = [int(m) for m in neighbor_masks]
    best = 0
    nodes = 0

    def popcount_degree(v: int, p: int) -> int:
        return bin(masks[v] & p).count("1")

    def dfs(p: int, size: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if max_nodes and nodes > max_nodes:
            raise RuntimeError("node budget exceeded")
        if size > best:
            best = size
        if p == 0:
            return
        if size + _clique_cover_bound(p, masks) <= best:
            return
        v, vdeg = -1, -1
        rest = p
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = popcount_degree(u, p)
            if d > vdeg:
                v, vdeg = u, d
        dfs(p & ~(masks[v] | (1 << v)), size + 1)
        dfs(p & ~(1 << v), size)

    dfs((1 << n) - 1, 0)
    return best


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------


def _greedy_clique(masks: list[int], n: int) -> list[int]:
    order = sorted(range(n), key=lambda v: -bin(masks[v]).count("1"))
    best: list[int] = []
    for seed in order:
        clique = [seed]
        common = masks[seed]
        while common:
            cand, cdeg = -1, -1
            rest = common
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                d = bin(masks[u] & common).count("1")
                if d > cdeg:
                    cand, cdeg = u, d
            clique.append(cand)
            common &= masks[cand]
        if len(clique) > len(best):
            best = clique
    return best


def _greedy_coloring(masks: list[int], n: int) -> int:
    order = sorted(range(n), key=lambda v: -bin(masks[v]).count("1"))
    color = [-1] * n
    used = 0
    for v in order:
        taken = 0
        for u in range(n):
            if color[u] >= 0 and (masks[v] >> u) & 1:
                taken |= 1 << color[u]
        c = 0
        while (taken >> c) & 1:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def chromatic_number(neighbor_masks, n: int, max_nodes: int = 0) -> int:
    """Exact chromatic number by iterative deepening with a clique seed."""
    masks = [int(m) for m in neighbor_masks]
    if n == 0:
        return 0
    clique = _greedy_clique(masks, n)
    lb = max(1, len(clique))
    ub = _greedy_coloring(masks, n)
    if lb == ub:
        return lb
    nodes = 0

    def colorable(t: int) -> bool:
        nonlocal nodes
        color = [-1] * n
        for i, v in enumerate(clique):
            color[v] = i

        def dfs(remaining: int, max_used: int) -> bool:
            nonlocal nodes
            nodes += 1
            if max_nodes and nodes > max_nodes:
                raise RuntimeError("node budget exceeded")
            if remaining == 0:
                return True
            # DSATUR: most saturated uncolored vertex, ties by degree then index
            pick, psat, pdeg = -1, -1, -1
            rest = remaining
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                taken = 0
                for u in range(n):
                    if color[u] >= 0 and (masks[v] >> u) & 1:
                        taken |= 1 << color[u]
                s = bin(taken).count("1")
                d = bin(masks[v]).count("1")
                if s > psat or (s == psat and d > pdeg):
                    pick, psat, pdeg = v, s, d
            taken = 0
            for u in range(n):
                if color[u] >= 0 and (masks[pick] >> u) & 1:
                    taken |= 1 << color[u]
            limit = min(t, max_used + 2)
            for c in range(limit):
                if (taken >> c) & 1:
                    continue
                color[pick] = c
                if dfs(remaining & ~(1 << pick), max(max_used, c)):
                    return True
                color[pick] = -1
            return False

        if len(clique) > t:
            return False
        remaining = 0
        for v in range(n):
            if color[v] < 0:
                remaining |= 1 << v
        return dfs(remaining, len(clique) - 1)

    for t in range(lb, ub):
        if colorable(t):
            return t
    return ub
