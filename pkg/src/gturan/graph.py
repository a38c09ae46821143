"""Simple undirected graphs stored as integer bit rows.

Vertices are the dense integers ``0..n-1``.  Row ``v`` is a Python int whose
bit ``u`` is set iff ``u`` and ``v`` are adjacent.  Graphs are immutable;
every operation returns a new graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


class GraphSizeError(ValueError):
    """Raised when a construction would exceed :data:`MAX_VERTICES`."""


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise GraphSizeError(f"{n} vertices exceeds the cap of {MAX_VERTICES}")


def popcount(x: int) -> int:
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_size(self.n)
        if len(self.rows) != self.n:
            raise ValueError("row count does not match vertex count")

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        _check_size(n)
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_size(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from bit rows, validating symmetry and the absence of loops."""
        n = len(rows)
        _check_size(n)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has out-of-range bits or a loop")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        return cls(n, tuple(rows))

    # -- queries ------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def components(self) -> int:
        seen = 0
        count = 0
        for v in range(self.n):
            if seen >> v & 1:
                continue
            count += 1
            frontier = 1 << v
            seen |= frontier
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~seen
                seen |= frontier
        return count

    def with_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- standard graphs -----------------------------------------------------------


def complete_graph(r: int) -> Graph:
    _check_size(r)
    full = (1 << r) - 1
    return Graph(r, tuple(full ^ (1 << v) for v in range(r)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    _check_size(a + b)
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, (right,) * a + (left,) * b)


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {m}")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def path(length: int) -> Graph:
    """Path on ``length`` vertices."""
    if length < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {length}")
    return Graph.from_edges(length, ((i, i + 1) for i in range(length - 1)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Vertices of ``g`` keep their labels; vertices of ``h`` are shifted by ``g.n``.
    """
    n = g.n + h.n
    _check_size(n)
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << g.n
    rows = [row | h_mask for row in g.rows]
    rows += [(row << g.n) | g_mask for row in h.rows]
    return Graph(n, tuple(rows))


def disjoint_union(t: int, f: Graph) -> Graph:
    if t < 0:
        raise ValueError("copy count must be non-negative")
    _check_size(t * f.n)
    rows = []
    for c in range(t):
        shift = c * f.n
        rows.extend(row << shift for row in f.rows)
    return Graph(t * f.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Subgraph induced by a vertex set, relabelled ``0..k-1`` in vertex order.

    ``vertices`` is a bit mask or an iterable of vertex indices.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask < 0 or mask >> g.n:
        raise ValueError("vertex set is not contained in the graph")
    keep = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in iter_bits(g.rows[v] & mask)))
    return Graph(len(keep), tuple(rows))
