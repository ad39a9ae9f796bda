"""Graph ingestion and adjacency algebra.

Provides the :class:`Graph` value type, parsers for the graph6 and
edge-list formats, closed-walk diagonal profiles, graph powers, and
partial walk-regularity tests.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CatalogError, GraphFormatError

__all__ = [
    "Graph",
    "DiagonalProfile",
    "parse_graph",
    "to_graph6",
    "diagonal_profile",
    "graph_power",
    "is_k_partially_walk_regular",
    "load_catalog",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Finite simple undirected graph with explicit adjacency matrix."""

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: np.ndarray
    name: str | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        a = self.adjacency
        if a.shape != (self.n, self.n):
            raise ValueError("adjacency shape does not match vertex count")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency has nonzero diagonal")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency is not symmetric")
        self.adjacency.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def relabel(self, name: str) -> "Graph":
        return Graph(self.n, self.edges, self.adjacency.copy(), name)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        label = self.name or "graph"
        return f"Graph({label}, n={self.n}, m={self.edge_count})"


def from_edges(n: int, edges, name: str | None = None) -> Graph:
    """Build a Graph from an iterable of vertex pairs."""
    adj = np.zeros((n, n), dtype=np.int64)
    canon = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range: ({u}, {v})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        a, b = (u, v) if u < v else (v, u)
        if (a, b) in canon:
            raise GraphFormatError(f"duplicate edge ({a}, {b})")
        canon.add((a, b))
        adj[a, b] = adj[b, a] = 1
    return Graph(n, frozenset(canon), adj, name)


# ---------------------------------------------------------------------------
# graph6 codec (63-offset encoding, column-major upper-triangle bits)
# ---------------------------------------------------------------------------


def _g6_read_n(data: bytes) -> tuple[int, int]:
    """Decode the leading vertex count; returns (n, bytes consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    c = data[0]
    if c == 126:  # long form
        if len(data) >= 4 and data[1] != 126:
            vals = [data[i] - 63 for i in range(1, 4)]
            if any(v < 0 or v > 63 for v in vals):
                raise GraphFormatError("invalid long-form graph6 size at byte 1")
            return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
        raise GraphFormatError("unsupported graph6 size prefix (n >= 258048)")
    if not (63 <= c <= 125):
        raise GraphFormatError(f"invalid graph6 size byte {c!r} at byte 0")
    return c - 63, 1


def parse_graph6(line: str, name: str | None = None) -> Graph:
    """Decode one line of standard graph6."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        data = text.encode("ascii", errors="strict") if text else b""
    except UnicodeEncodeError as exc:
        raise GraphFormatError(f"graph6 contains non-ASCII byte at offset {exc.start}") from exc
    n, pos = _g6_read_n(data)
    if n < 1:
        raise GraphFormatError("graph6 with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body length {len(body)} != expected {need} (byte offset {pos})"
        )
    bits = np.zeros(need * 6, dtype=bool)
    for i, byte in enumerate(body):
        v = byte - 63
        if not (0 <= v <= 63):
            raise GraphFormatError(f"invalid graph6 byte {byte!r} at offset {pos + i}")
        for b in range(6):
            bits[6 * i + b] = (v >> (5 - b)) & 1
    if np.any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits are not zero")
    adj = np.zeros((n, n), dtype=np.int64)
    idx = 0
    edges = []
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                adj[row, col] = adj[col, row] = 1
                edges.append((row, col))
            idx += 1
    return Graph(n, frozenset(edges), adj, name)


def to_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (short form for n <= 62)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise GraphFormatError("graph too large for graph6 encoding")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(int(g.adjacency[row, col]))
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str, name: str | None = None) -> Graph:
    """Parse the "n=<count>" header followed by "u v" lines (0-based)."""
    lines = text.splitlines()
    header = None
    header_line = 0
    for i, raw in enumerate(lines):
        s = raw.strip()
        if s and not s.startswith("#"):
            header, header_line = s, i + 1
            break
    if header is None or not header.startswith("n="):
        raise GraphFormatError("edge list must start with an 'n=<count>' header")
    try:
        n = int(header[2:])
    except ValueError as exc:
        raise GraphFormatError(f"bad vertex count on line {header_line}") from exc
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive (line {header_line})")

    edges = []
    for lineno, raw in enumerate(lines, start=1):
        if lineno <= header_line:
            continue
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v' on line {lineno}, got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"non-integer vertex on line {lineno}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range on line {lineno}")
        if u == v:
            raise GraphFormatError(f"self-loop on line {lineno}")
        edges.append((u, v))
    try:
        return from_edges(n, edges, name)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{exc} (edge list body)") from exc


def parse_graph(source: str, format: str = "graph6", name: str | None = None) -> Graph:
    """Parse a graph from text in the given format ('graph6' or 'edge_list')."""
    if format == "graph6":
        return parse_graph6(source, name)
    if format == "edge_list":
        return parse_edge_list(source, name)
    raise ValueError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# Closed-walk diagonals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagonalProfile:
    """Per-vertex closed-walk counts (A^i)_vv for i = 0..k.

    diag[v][0] = 1 and diag[v][1] = 0 always; diag[v][2] is the degree and
    diag[v][3] twice the triangle count when k is large enough.
    """

    k: int
    diag: tuple[tuple[int, ...], ...]
    d_min: int
    d_max: int
    hull_points: tuple[tuple[int, int], ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.diag)

    def is_constant(self, upto: int | None = None) -> bool:
        upto = self.k if upto is None else min(upto, self.k)
        first = self.diag[0][: upto + 1]
        return all(row[: upto + 1] == first for row in self.diag)


def _triangle_counts(g: Graph) -> np.ndarray:
    """t(v) for every vertex, via adjacency-row intersections."""
    a = g.adjacency
    t = np.zeros(g.n, dtype=np.int64)
    rows = [np.flatnonzero(a[v]) for v in range(g.n)]
    for v in range(g.n):
        acc = 0
        for u in rows[v]:
            acc += int(a[v] @ a[u])
        t[v] = acc // 2
    return t


def diagonal_profile(g: Graph, k: int) -> DiagonalProfile:
    """Exact integer closed-walk diagonals (A^i)_vv for i = 0..k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    deg = g.degrees()
    cols = [np.ones(n, dtype=np.int64), np.zeros(n, dtype=np.int64)]
    if k >= 2:
        cols.append(deg.astype(np.int64))
    tri = _triangle_counts(g)
    if k >= 3:
        cols.append(2 * tri)
    if k >= 4:
        power = np.linalg.matrix_power(g.adjacency, 3)
        for _ in range(4, k + 1):
            power = power @ g.adjacency
            cols.append(np.diag(power).copy())
    diag = tuple(tuple(int(cols[i][v]) for i in range(k + 1)) for v in range(n))
    hull = tuple((int(deg[v]), int(2 * tri[v])) for v in range(n))
    return DiagonalProfile(
        k=k,
        diag=diag,
        d_min=int(deg.min()),
        d_max=int(deg.max()),
        hull_points=hull,
    )


def _bfs_within(g: Graph, start: int, depth: int) -> list[int]:
    """Vertices at distance 1..depth from start."""
    dist = {start: 0}
    out = []
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if dist[v] == depth:
            continue
        for u in np.flatnonzero(g.adjacency[v]):
            u = int(u)
            if u not in dist:
                dist[u] = dist[v] + 1
                out.append(u)
                queue.append(u)
    return out


def graph_power(g: Graph, k: int) -> Graph:
    """G^k: join vertices at distance <= k in g."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return g
    edges = set()
    for v in range(g.n):
        for u in _bfs_within(g, v, k):
            if v < u:
                edges.add((v, u))
    name = f"{g.name}^{k}" if g.name else None
    return from_edges(g.n, edges, name)


def is_k_partially_walk_regular(g: Graph, k: int) -> bool:
    """True iff (A^l)_vv is vertex-independent for every l <= k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return diagonal_profile(g, k).is_constant()


# ---------------------------------------------------------------------------
# Catalog loading
# ---------------------------------------------------------------------------


def load_catalog(directory: str | Path) -> list[tuple[str, Graph]]:
    """Load named graphs listed in a manifest.csv of "name,file" rows."""
    root = Path(directory)
    manifest = root / "manifest.csv"
    if not manifest.is_file():
        raise CatalogError(f"missing manifest: {manifest}")
    entries: list[tuple[str, str]] = []
    with manifest.open(newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#"):
                continue
            if row[0] == "name" and row[1:2] == ["file"]:
                continue
            if len(row) != 2:
                raise CatalogError(f"bad manifest row {row!r}")
            entries.append((row[0], row[1]))

    graphs: list[tuple[str, Graph]] = []
    bad: list[str] = []
    for name, fname in entries:
        path = root / fname
        if not path.is_file():
            bad.append(f"{fname}: missing")
            continue
        try:
            line = path.read_text().strip()
            graphs.append((name, parse_graph6(line, name)))
        except (GraphFormatError, UnicodeDecodeError) as exc:
            bad.append(f"{fname}: {exc}")
    if bad:
        raise CatalogError("catalog load failed: " + "; ".join(bad))
    return graphs
