# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: mirror of _kernels_py with identical candidate order,
pivoting rules, and tie-breaking, so both backends agree decision-for-
decision on the same inputs."""

import numpy as np

SINGULAR_TOL = 1e-12
cdef double _SING = 1e-12


cdef inline int _popcount(unsigned long long x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


# ---------------------------------------------------------------------------
# Linear feasibility
# ---------------------------------------------------------------------------


cdef bint _gauss_solve(double* m, double* r, double* x, int d) nogil:
    """Partial-pivot Gauss on a d*d row-major system; False if singular."""
    cdef int col, row, piv, j
    cdef double best, v, factor, acc
    for col in range(d):
        piv = col
        best = m[col * d + col]
        if best < 0:
            best = -best
        for row in range(col + 1, d):
            v = m[row * d + col]
            if v < 0:
                v = -v
            if v > best:
                best = v
                piv = row
        if best < _SING:
            return False
        if piv != col:
            for j in range(d):
                v = m[col * d + j]
                m[col * d + j] = m[piv * d + j]
                m[piv * d + j] = v
            v = r[col]
            r[col] = r[piv]
            r[piv] = v
        for row in range(col + 1, d):
            factor = m[row * d + col] / m[col * d + col]
            for j in range(col, d):
                m[row * d + j] -= factor * m[col * d + j]
            r[row] -= factor * r[col]
    for col in range(d - 1, -1, -1):
        acc = r[col]
        for j in range(col + 1, d):
            acc -= m[col * d + j] * x[j]
        x[col] = acc / m[col * d + col]
    return True


cdef bint _check_rows(double* x, double[:, ::1] lhs, signed char[::1] rel,
                      double[::1] rhs, double slack, int d) nogil:
    cdef int i, j
    cdef double s
    for i in range(lhs.shape[0]):
        s = 0.0
        for j in range(d):
            s += lhs[i, j] * x[j]
        s -= rhs[i]
        if rel[i] > 0:
            if s < -slack:
                return False
        elif rel[i] < 0:
            if s > slack:
                return False
        else:
            if s < -slack or s > slack:
                return False
    return True


def feasible_point(double[:, ::1] gen_normals, double[::1] gen_rhs,
                   double[:, ::1] test_lhs, signed char[::1] test_rel,
                   double[::1] test_rhs, double[:, ::1] extra_points,
                   double slack):
    cdef int h = gen_normals.shape[0]
    cdef int dim = gen_normals.shape[1]
    if dim > 8:
        raise ValueError("dimension exceeds compiled kernel limit")
    cdef int idx[8]
    cdef double mat[64]
    cdef double rhs[8]
    cdef double x[8]
    cdef int i, j, pos
    cdef bint found = False

    if h >= dim:
        for i in range(dim):
            idx[i] = i
        while True:
            for i in range(dim):
                for j in range(dim):
                    mat[i * dim + j] = gen_normals[idx[i], j]
                rhs[i] = gen_rhs[idx[i]]
            with nogil:
                if _gauss_solve(mat, rhs, x, dim):
                    found = _check_rows(x, test_lhs, test_rel, test_rhs, slack, dim)
            if found:
                out = np.empty(dim, dtype=np.float64)
                for i in range(dim):
                    out[i] = x[i]
                return out
            # next lexicographic dim-subset of range(h)
            pos = dim - 1
            while pos >= 0 and idx[pos] == h - dim + pos:
                pos -= 1
            if pos < 0:
                break
            idx[pos] += 1
            for i in range(pos + 1, dim):
                idx[i] = idx[i - 1] + 1

    cdef int p
    for p in range(extra_points.shape[0]):
        for i in range(dim):
            x[i] = extra_points[p, i]
        with nogil:
            found = _check_rows(x, test_lhs, test_rel, test_rhs, slack, dim)
        if found:
            out = np.empty(dim, dtype=np.float64)
            for i in range(dim):
                out[i] = x[i]
            return out
    return None


# ---------------------------------------------------------------------------
# Maximum independent set
# ---------------------------------------------------------------------------


cdef int _clique_cover_bound(unsigned long long p, unsigned long long* masks) nogil:
    cdef unsigned long long cliques[64]
    cdef int ncl = 0
    cdef unsigned long long rest = p, bit
    cdef int v, i
    cdef bint placed
    while rest:
        bit = rest & (~rest + 1)
        v = _popcount(bit - 1)
        rest &= rest - 1
        placed = False
        for i in range(ncl):
            if cliques[i] & ~masks[v] == 0:
                cliques[i] |= bit
                placed = True
                break
        if not placed:
            cliques[ncl] = bit
            ncl += 1
    return ncl


cdef struct MisState:
    unsigned long long* masks
    int best
    long long nodes
    long long max_nodes
    bint aborted


cdef void _mis_dfs(MisState* st, unsigned long long p, int size) nogil:
    if st.aborted:
        return
    st.nodes += 1
    if st.max_nodes > 0 and st.nodes > st.max_nodes:
        st.aborted = True
        return
    if size > st.best:
        st.best = size
    if p == 0:
        return
    if size + _clique_cover_bound(p, st.masks) <= st.best:
        return
    cdef unsigned long long rest = p, bit
    cdef int u, d, v = -1, vdeg = -1
    while rest:
        bit = rest & (~rest + 1)
        u = _popcount(bit - 1)
        rest &= rest - 1
        d = _popcount(st.masks[u] & p)
        if d > vdeg:
            v = u
            vdeg = d
    _mis_dfs(st, p & ~(st.masks[v] | (<unsigned long long>1 << v)), size + 1)
    _mis_dfs(st, p & ~(<unsigned long long>1 << v), size)


def mis_size(unsigned long long[::1] neighbor_masks, int n, long long max_nodes=0):
    if n > 63:
        raise ValueError("compiled kernel supports at most 63 vertices")
    cdef unsigned long long masks[64]
    cdef int i
    for i in range(n):
        masks[i] = neighbor_masks[i]
    cdef MisState st
    st.masks = masks
    st.best = 0
    st.nodes = 0
    st.max_nodes = max_nodes
    st.aborted = False
    with nogil:
        _mis_dfs(&st, (<unsigned long long>1 << n) - 1, 0)
    if st.aborted:
        raise RuntimeError("node budget exceeded")
    return st.best


# ---------------------------------------------------------------------------
# Exact chromatic number
# ---------------------------------------------------------------------------


cdef struct ColState:
    unsigned long long* masks
    int n
    int t
    int* color
    long long nodes
    long long max_nodes
    bint aborted


cdef unsigned long long _taken_colors(ColState* st, int v) nogil:
    cdef unsigned long long taken = 0
    cdef int u
    for u in range(st.n):
        if st.color[u] >= 0 and (st.masks[v] >> u) & 1:
            taken |= <unsigned long long>1 << st.color[u]
    return taken


cdef bint _col_dfs(ColState* st, unsigned long long remaining, int max_used) nogil:
    if st.aborted:
        return False
    st.nodes += 1
    if st.max_nodes > 0 and st.nodes > st.max_nodes:
        st.aborted = True
        return False
    if remaining == 0:
        return True
    cdef unsigned long long rest = remaining, bit, taken
    cdef int v, s, d, pick = -1, psat = -1, pdeg = -1
    while rest:
        bit = rest & (~rest + 1)
        v = _popcount(bit - 1)
        rest &= rest - 1
        taken = _taken_colors(st, v)
        s = _popcount(taken)
        d = _popcount(st.masks[v])
        if s > psat or (s == psat and d > pdeg):
            pick = v
            psat = s
            pdeg = d
    taken = _taken_colors(st, pick)
    cdef int limit = st.t
    if max_used + 2 < limit:
        limit = max_used + 2
    cdef int c, mu
    for c in range(limit):
        if (taken >> c) & 1:
            continue
        st.color[pick] = c
        mu = max_used if max_used >= c else c
        if _col_dfs(st, remaining & ~(<unsigned long long>1 << pick), mu):
            return True
        st.color[pick] = -1
    return False


def chromatic_number(unsigned long long[::1] neighbor_masks, int n, long long max_nodes=0):
    if n > 63:
        raise ValueError("compiled kernel supports at most 63 vertices")
    if n == 0:
        return 0
    cdef unsigned long long masks[64]
    cdef int i, v, u
    for i in range(n):
        masks[i] = neighbor_masks[i]

    # greedy clique from every seed in (degree desc, index asc) order
    degs = [0] * n
    for i in range(n):
        degs[i] = _popcount(masks[i])
    cdef list order = sorted(range(n), key=lambda w: -degs[w])
    cdef list best_clique = []
    cdef unsigned long long common, rest, bit
    cdef int cand, cdeg, d
    for seed in order:
        clique = [seed]
        common = masks[<int>seed]
        while common:
            cand = -1
            cdeg = -1
            rest = common
            while rest:
                bit = rest & (~rest + 1)
                u = _popcount(bit - 1)
                rest &= rest - 1
                d = _popcount(masks[u] & common)
                if d > cdeg:
                    cand = u
                    cdeg = d
            clique.append(cand)
            common &= masks[cand]
        if len(clique) > len(best_clique):
            best_clique = clique
    cdef int lb = max(1, len(best_clique))

    # greedy first-fit coloring for the upper bound
    cdef int color_arr[64]
    for i in range(n):
        color_arr[i] = -1
    cdef unsigned long long taken
    cdef int c, ub = 0
    for w in order:
        v = <int>w
        taken = 0
        for u in range(n):
            if color_arr[u] >= 0 and (masks[v] >> u) & 1:
                taken |= <unsigned long long>1 << color_arr[u]
        c = 0
        while (taken >> c) & 1:
            c += 1
        color_arr[v] = c
        if c + 1 > ub:
            ub = c + 1
    if lb == ub:
        return lb

    cdef ColState st
    st.masks = masks
    st.n = n
    st.max_nodes = max_nodes
    cdef int col2[64]
    st.color = col2
    cdef unsigned long long remaining
    cdef int t
    cdef bint ok
    cdef int cl_sz = len(best_clique)
    st.nodes = 0
    for t in range(lb, ub):
        if cl_sz > t:
            continue
        for i in range(n):
            col2[i] = -1
        for i in range(cl_sz):
            col2[<int>best_clique[i]] = i
        remaining = 0
        for i in range(n):
            if col2[i] < 0:
                remaining |= <unsigned long long>1 << i
        st.t = t
        st.aborted = False
        with nogil:
            ok = _col_dfs(&st, remaining, cl_sz - 1)
        if st.aborted:
            raise RuntimeError("node budget exceeded")
        if ok:
            return t
    return ub
