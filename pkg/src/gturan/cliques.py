"""Exact clique counting: ``k_r(G)``, clique profiles and per-vertex clique degrees."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .graph import Graph, induced_subgraph, iter_bits, mask_of

DEFAULT_RMAX = 8


@dataclass(frozen=True)
class CliqueProfile:
    """``counts[s]`` is the number of ``s``-vertex cliques, ``s = 0..rmax``."""

    counts: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.counts[s]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def rmax(self) -> int:
        return len(self.counts) - 1

    def as_list(self) -> list[int]:
        return list(self.counts)


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last vertex order (repeatedly remove a minimum-degree vertex)."""
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = 0
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed >> v & 1 or d != deg[v]:
            continue
        removed |= 1 << v
        order.append(v)
        for u in iter_bits(g.rows[v] & ~removed):
            deg[u] -= 1
            heapq.heappush(heap, (deg[u], u))
    return order


def forward_rows(g: Graph) -> list[int]:
    """Rows relabelled by degeneracy order, keeping only later neighbours."""
    order = degeneracy_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    fwd = []
    for i, v in enumerate(order):
        row = mask_of(pos[u] for u in iter_bits(g.rows[v]))
        fwd.append(row >> (i + 1) << (i + 1))
    return fwd


def count_cliques(g: Graph, r: int) -> int:
    if r < 0:
        raise ValueError("clique size must be non-negative")
    if r == 0:
        return 1
    if r == 1:
        return g.n
    if r == 2:
        return g.edge_count
    return kernels.clique_count(forward_rows(g), r)


def clique_profile(g: Graph, rmax: int = DEFAULT_RMAX) -> CliqueProfile:
    if rmax < 0:
        raise ValueError("rmax must be non-negative")
    return CliqueProfile(tuple(kernels.clique_profile(forward_rows(g), rmax)))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def neighborhood_clique_count(
    g: Graph, v: int, s: int, exclude: Iterable[int] | int = 0
) -> int:
    """``k_s`` of the subgraph induced by ``N(v)`` minus an excluded vertex set."""
    _check_vertex(g, v)
    excl = exclude if isinstance(exclude, int) else mask_of(exclude)
    return count_cliques(induced_subgraph(g, g.rows[v] & ~excl), s)


def clique_degree(g: Graph, v: int, r: int) -> int:
    """Number of ``r``-cliques containing ``v``."""
    _check_vertex(g, v)
    if r < 1:
        raise ValueError("clique size must be at least 1")
    return neighborhood_clique_count(g, v, r - 1)
