"""Dense undirected graphs and the structural scans used throughout.

Graphs are small and dense enough here that an n-by-n boolean matrix plus
per-vertex bitmasks beats adjacency lists: components, common-neighbour
counts and neighbourhood comparisons all become vectorised operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

import numpy as np

from ._util import iter_bits
from .errors import GraphFormatError


class Graph:
    """Undirected graph on vertices 0..n-1 with a read-only adjacency matrix."""

    __slots__ = ("n", "adj", "_masks", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u, v] = adj[v, u] = True
        adj.setflags(write=False)
        self.n: int = n
        self.adj: np.ndarray = adj
        self._masks: list[int] | None = None
        self._nbrs: list[tuple[int, ...]] | None = None

    @classmethod
    def from_adjacency(cls, adj: np.ndarray) -> Graph:
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency matrix must be square, got shape {adj.shape}")
        if adj.shape[0] < 1:
            raise ValueError("graph needs at least one vertex")
        if adj.diagonal().any():
            raise ValueError("adjacency matrix has a self-loop on its diagonal")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix must be symmetric")
        return cls._from_validated(adj.copy())

    @classmethod
    def _from_validated(cls, adj: np.ndarray) -> Graph:
        g = object.__new__(cls)
        adj.setflags(write=False)
        g.n = adj.shape[0]
        g.adj = adj
        g._masks = None
        g._nbrs = None
        return g

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending lexicographic."""
        us, vs = np.nonzero(np.triu(self.adj))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    @property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1, dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        if self._nbrs is None:
            self._nbrs = [tuple(np.nonzero(row)[0].tolist()) for row in self.adj]
        return self._nbrs[v]

    @property
    def neighbour_masks(self) -> list[int]:
        """Per-vertex neighbourhood bitmasks (bit v set means adjacent to v)."""
        if self._masks is None:
            packed = np.packbits(self.adj, axis=1, bitorder="little")
            self._masks = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return self._masks

    def induced(self, verts: Iterable[int]) -> Graph:
        """Induced subgraph on the given vertices, relabelled by their sort order."""
        idx = sorted(set(verts))
        if not idx:
            raise ValueError("induced subgraph needs at least one vertex")
        if idx[0] < 0 or idx[-1] >= self.n:
            raise ValueError(f"vertices {idx} out of range for n={self.n}")
        return Graph._from_validated(self.adj[np.ix_(idx, idx)].copy())

    def complement(self) -> Graph:
        comp = ~self.adj
        np.fill_diagonal(comp, False)
        return Graph._from_validated(comp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _mask_components(masks: list[int], n: int) -> tuple[tuple[int, ...], ...]:
    """Connected parts of the graph given by per-vertex bitmasks.

    Parts come out ordered by their smallest vertex because seeds are taken
    ascending; several callers rely on that order.
    """
    unseen = (1 << n) - 1
    parts = []
    while unseen:
        seed = unseen & -unseen
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= masks[v]
            frontier = grown & unseen & ~comp
            comp |= frontier
        unseen &= ~comp
        parts.append(tuple(iter_bits(comp)))
    return tuple(parts)


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    return _mask_components(g.neighbour_masks, g.n)


def complement_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components of the complement graph, ordered by smallest vertex."""
    full = (1 << g.n) - 1
    masks = g.neighbour_masks
    co = [full ^ masks[v] ^ (1 << v) for v in range(g.n)]
    return _mask_components(co, g.n)


def cut_vertices(g: Graph) -> tuple[int, ...]:
    """All cut vertices, ascending, via an iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbours(root)))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbours(w))))
                    descended = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if pv == root:
                    root_children += 1
                elif low[v] >= disc[pv]:
                    cut[pv] = True
        if root_children >= 2:
            cut[root] = True
    return tuple(v for v in range(n) if cut[v])


def is_clique(g: Graph, verts: Iterable[int]) -> bool:
    """True when the given vertices are pairwise adjacent."""
    idx = sorted(set(verts))
    if len(idx) <= 1:
        return True
    sub = g.adj[np.ix_(idx, idx)]
    return bool(sub.sum() == len(idx) * (len(idx) - 1))


@dataclass(frozen=True, eq=False)
class AdjSquare:
    """The matrix A@A of a graph; entry (u, v) counts common neighbours."""

    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.matrix.diagonal()


def adjacency_square(g: Graph) -> AdjSquare:
    # float64 matmul hits BLAS and stays exact for counts below 2**53.
    a = g.adj.astype(np.float64)
    m = (a @ a).astype(np.int64)
    m.setflags(write=False)
    return AdjSquare(m)


def find_comparable_pair(g: Graph, a2: AdjSquare | None = None) -> tuple[int, int] | None:
    """Smallest (u, v) with u, v non-adjacent and N(u) a subset of N(v).

    |N(u) & N(v)| = (A@A)[u, v], so the subset test is one comparison per
    pair.  An isolated u qualifies against every other vertex.
    """
    if a2 is None:
        a2 = adjacency_square(g)
    deg = a2.degrees
    cand = (a2.matrix == deg[:, None]) & ~g.adj
    np.fill_diagonal(cand, False)
    flat = np.flatnonzero(cand)
    if flat.size == 0:
        return None
    u, v = divmod(int(flat[0]), g.n)
    return u, v


def clique_attachment(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Smallest (z, Q) such that every q in Q satisfies N[q] = Q + {z}.

    Vertices with the same closed neighbourhood are pairwise adjacent, so
    grouping by closed-neighbourhood mask finds every candidate Q at once:
    a group is valid exactly when its shared mask has one extra bit, and
    that bit is the anchor z.  Ties break on (z, min Q).
    """
    masks = g.neighbour_masks
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(masks[v] | (1 << v), []).append(v)
    best: tuple[tuple[int, int], tuple[int, tuple[int, ...]]] | None = None
    for mask, q in groups.items():
        extra = mask
        for v in q:
            extra ^= 1 << v
        if extra == 0 or extra & (extra - 1):
            continue
        z = extra.bit_length() - 1
        key = (z, q[0])
        if best is None or key < best[0]:
            best = (key, (z, tuple(q)))
    return None if best is None else best[1]


def parse_graph(text: str) -> Graph:
    """Parse the plain edge-list format: a header 'n m' then m lines 'u v'."""
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not rows:
        raise GraphFormatError("empty input")
    lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError(f"header must be 'n m', got {header!r}", lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(f"header must be two integers, got {header!r}", lineno) from None
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
    if m < 0:
        raise GraphFormatError(f"edge count must be non-negative, got {m}", lineno)
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(body)} edge lines")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, ln in body:
        fields = ln.split()
        if len(fields) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"edge line must be two integers, got {ln!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        if u >= v:
            raise GraphFormatError(f"edge must satisfy u < v, got ({u}, {v})", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Serialise to the plain edge-list format, edges ascending."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
