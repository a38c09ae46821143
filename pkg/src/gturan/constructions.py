"""Lower-bound witnesses: joins ``K_t + H`` and random C_2k-free graphs."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import factorial

import numpy as np

from .graph import Graph, complete_graph, join
from .norm_graph import norm_graph
from .patterns import (
    CertificationError,
    CompleteBipartite,
    DisjointCopies,
    EvenCycle,
    cycle_through_edge,
    is_free,
)

RNG_ALGORITHM = "numpy.PCG64"


def lower_bound_kab(t: int, q: int, a: int, certify: bool = True) -> Graph:
    """``K_t`` joined with the norm graph H(q, a).

    The result has ``t + q^(a-1)(q-1)`` vertices and no ``t+1`` disjoint
    copies of K_{a,(a-1)!+1}.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    h = norm_graph(q, a)
    g = join(complete_graph(t), h)
    if certify:
        forbidden = DisjointCopies(t + 1, CompleteBipartite(a, factorial(a - 1) + 1))
        if not is_free(g, forbidden):
            raise CertificationError(f"K_{t} + H({q},{a}) contains {forbidden}")
    return g


def lower_bound_c2k(t: int, h: Graph, k: int) -> Graph:
    """``K_t`` joined with a C_2k-free graph ``h``; certified (t+1)C_2k-free."""
    if t < 0:
        raise ValueError("t must be non-negative")
    cyc = EvenCycle(2 * k)
    if not is_free(h, cyc):
        raise ValueError(f"host graph is not {cyc}-free")
    g = join(complete_graph(t), h)
    if not is_free(g, DisjointCopies(t + 1, cyc)):
        raise CertificationError(f"K_{t} + H contains {t + 1}*{cyc}")
    return g


@dataclass(frozen=True)
class DeletionTrace:
    n: int
    k: int
    p: float
    seed: int
    edges_before: int
    cycles_destroyed: int
    edges_after: int
    rng: str = RNG_ALGORITHM

    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        """Flat ``key=value`` record, one field per line."""
        return "\n".join(f"{k}={v}" for k, v in asdict(self).items())


def default_probability(n: int, k: int) -> float:
    """Edge probability ``n^(-1 + 1/(2k-1))``."""
    return float(n) ** (-1.0 + 1.0 / (2 * k - 1))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with pairs ``(i, j), i < j`` drawn in lexicographic order."""
    rng = np.random.Generator(np.random.PCG64(seed))
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_c2kfree(
    n: int, k: int, p: float | None = None, seed: int = 0
) -> tuple[Graph, DeletionTrace]:
    """Sample G(n, p) and delete edges until no cycle of length ``2k`` remains.

    Edges are scanned in lexicographic order and an edge is deleted when a
    ``2k``-cycle passes through it.  Every edge before it has no such cycle,
    so the deleted edge is the smallest edge of the cycle found; deletions
    never create cycles, so a single scan suffices.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2 * k:
        raise ValueError(f"n must be at least 2k = {2 * k}")
    if p is None:
        p = default_probability(n, k)
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")

    g = sample_gnp(n, p, seed)
    before = g.edge_count
    rows = list(g.rows)
    everyone = g.vertex_mask
    destroyed = 0
    for u, v in list(g.edges()):
        if cycle_through_edge(rows, u, v, 2 * k, everyone) is not None:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            destroyed += 1
    out = Graph(n, tuple(rows))
    if not is_free(out, EvenCycle(2 * k)):
        raise CertificationError("deletion pass left a 2k-cycle")
    trace = DeletionTrace(n, k, float(p), seed, before, destroyed, out.edge_count)
    return out, trace
