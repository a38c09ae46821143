"""Exact ex(n, K_r, F) for small n.

``extremal_number`` walks pattern-free graphs up to isomorphism by orderly
generation: a graph is coded by its upper triangle read column by column,
the canonical representative is the relabelling with the largest code, and
children add one edge after the last edge of the parent's code.  Deleting
the last edge of a canonical code yields a canonical code, so every
isomorphism class is reached exactly once, and since freeness is closed
under edge deletion the walk can stop at the first graph containing F.

Subtrees are cut when ``k_r`` of the parent plus every still-addable edge
cannot beat the incumbent.

``extremal_number_naive`` enumerates all labelled graphs and shares nothing
with the orderly walk except the clique counter and the pattern checker.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .cliques import count_cliques
from .graph import Graph
from .graph6 import to_graph6
from .patterns import (
    CertificationError,
    Clique,
    EvenCycle,
    Pattern,
    _find_clique,
    cycle_through_edge,
    is_free,
)

MAX_N = 10
NAIVE_MAX_N = 7
WORKERS_ENV = "GTURAN_WORKERS"

CANONICAL = "canonical-augmentation"
NAIVE = "naive-labeled"


class SearchCapError(ValueError):
    pass


class IncompleteSearchError(RuntimeError):
    pass


class _Timeout(Exception):
    pass


@dataclass
class SearchResult:
    n: int
    r: int
    pattern: str
    value: int
    witness: Graph
    nodes_explored: int
    elapsed: float
    method: str
    complete: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "pattern": self.pattern,
            "value": self.value,
            "witness": to_graph6(self.witness).decode(),
            "method": self.method,
            "nodes": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "complete": self.complete,
        }


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def _kr(rows, r: int) -> int:
    if r == 2:
        return sum(row.bit_count() for row in rows) // 2
    return kernels.clique_count([row >> (v + 1) << (v + 1) for v, row in enumerate(rows)], r)


def _trivial(n: int, r: int, pat: Pattern, method: str, t0: float) -> SearchResult | None:
    empty = Graph.empty(n)
    if not is_free(empty, pat):
        raise ValueError(f"every graph on {n} vertices contains {pat}")
    if r <= 1 or r > n:
        value = count_cliques(empty, r) if r <= 1 else 0
        return SearchResult(n, r, str(pat), value, empty, 0, time.perf_counter() - t0, method, True)
    return None


def _finish(n, r, pat, value, rows, nodes, t0, method, complete) -> SearchResult:
    witness = Graph(n, tuple(rows))
    if not is_free(witness, pat) or count_cliques(witness, r) != value:
        raise CertificationError(f"oracle witness failed re-certification for {pat}")
    return SearchResult(n, r, str(pat), value, witness, nodes, time.perf_counter() - t0, method, complete)


class _Orderly:
    def __init__(self, n: int, r: int, pat: Pattern, deadline: float | None):
        self.n, self.r, self.pat = n, r, pat
        self.deadline = deadline
        self.pos = _positions(n)
        # suffix[p][v]: neighbours of v over positions p, p+1, ...
        P = len(self.pos)
        self.suffix = [[0] * n for _ in range(P + 1)]
        for p in range(P - 1, -1, -1):
            i, j = self.pos[p]
            row = list(self.suffix[p + 1])
            row[i] |= 1 << j
            row[j] |= 1 << i
            self.suffix[p] = row
        self.full = (1 << n) - 1
        self.nodes = 0
        self.best = -1
        self.best_rows: list[int] | None = None

    def free_after(self, rows: list[int], i: int, j: int) -> bool:
        """Pattern-freeness of ``rows`` given the parent (without ``ij``) was free."""
        pat = self.pat
        if isinstance(pat, EvenCycle):
            return cycle_through_edge(rows, i, j, pat.length, self.full) is None
        if isinstance(pat, Clique):
            if pat.r <= 2:
                return False
            return _find_clique(rows, pat.r - 2, rows[i] & rows[j]) is None
        return is_free(Graph(self.n, tuple(rows)), pat)

    def children(self, rows: list[int], last: int):
        n = self.n
        for p in range(last + 1, len(self.pos)):
            i, j = self.pos[p]
            child = list(rows)
            child[i] |= 1 << j
            child[j] |= 1 << i
            if kernels.is_canonical(child, n) and self.free_after(child, i, j):
                yield child, p

    def visit(self, rows: list[int], last: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 128 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout
        val = _kr(rows, self.r)
        if val > self.best:
            self.best, self.best_rows = val, rows
        if last + 1 < len(self.pos):
            fut = self.suffix[last + 1]
            if _kr([a | b for a, b in zip(rows, fut)], self.r) <= self.best:
                return
        for child, p in self.children(rows, last):
            self.visit(child, p)

    def run(self, rows: list[int], last: int) -> bool:
        try:
            self.visit(rows, last)
        except _Timeout:
            return False
        return True

    def frontier(self, depth: int):
        """Preorder items down to ``depth`` edges: ``("node", rows, last)`` for
        shallower graphs, ``("tree", rows, last)`` for subtrees to delegate."""
        out = []

        def rec(rows, last, d):
            if d == depth:
                out.append(("tree", rows, last))
                return
            out.append(("node", rows, last))
            for child, p in self.children(rows, last):
                rec(child, p, d + 1)

        rec([0] * self.n, -1, 0)
        return out


def _subtree_worker(args):
    n, r, pat, rows, last, seed_best, deadline = args
    s = _Orderly(n, r, pat, deadline)
    s.best = seed_best
    complete = s.run(rows, last)
    return s.best, s.best_rows, s.nodes, complete


def extremal_number(
    n: int,
    r: int,
    pat: Pattern,
    timeout: float | None = None,
    cap: int = MAX_N,
    workers: int | None = None,
) -> SearchResult:
    """Maximum ``k_r`` over ``pat``-free graphs on ``n`` vertices, with a witness.

    On timeout the best value found so far is returned with ``complete=False``.
    The witness is the first optimal graph in the walk's preorder, whatever
    the worker count.
    """
    if cap > MAX_N:
        raise SearchCapError(f"cap may not exceed {MAX_N}")
    if n > cap:
        raise SearchCapError(f"n={n} exceeds the search cap {cap}")
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    t0 = time.perf_counter()
    trivial = _trivial(n, r, pat, CANONICAL, t0)
    if trivial is not None:
        return trivial
    deadline = None if timeout is None else t0 + timeout
    workers = default_workers() if workers is None else workers

    if workers <= 1 or n < 8:
        s = _Orderly(n, r, pat, deadline)
        complete = s.run([0] * n, -1)
        return _finish(n, r, pat, s.best, s.best_rows, s.nodes, t0, CANONICAL, complete)

    s = _Orderly(n, r, pat, deadline)
    items = s.frontier(depth=3)
    best, best_rows, nodes, complete = -1, None, 0, True
    jobs = []
    seed = -1
    for kind, rows, last in items:
        if kind == "node":
            nodes += 1
            val = _kr(rows, r)
            seed = max(seed, val)
            jobs.append(("node", val, rows))
        else:
            jobs.append(("tree", (n, r, pat, rows, last, seed, deadline), None))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_subtree_worker, j[1]) if j[0] == "tree" else None for j in jobs]
        for job, fut in zip(jobs, futures):
            if job[0] == "node":
                val, rows = job[1], job[2]
            else:
                val, rows, sub_nodes, sub_complete = fut.result()
                nodes += sub_nodes
                complete &= sub_complete
            if val > best and rows is not None:
                best, best_rows = val, rows
    return _finish(n, r, pat, best, best_rows, nodes, t0, CANONICAL, complete)


def extremal_number_naive(n: int, r: int, pat: Pattern, timeout: float | None = None) -> SearchResult:
    """Same contract as :func:`extremal_number` by scanning all labelled graphs."""
    if n > NAIVE_MAX_N:
        raise SearchCapError(f"naive search is capped at n={NAIVE_MAX_N}")
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    t0 = time.perf_counter()
    trivial = _trivial(n, r, pat, NAIVE, t0)
    if trivial is not None:
        return trivial
    deadline = None if timeout is None else t0 + timeout
    pos = _positions(n)
    best, best_rows = -1, None
    complete = True
    for mask in range(1 << len(pos)):
        if deadline is not None and mask % 1024 == 0 and time.perf_counter() > deadline:
            complete = False
            break
        rows = [0] * n
        for k, (i, j) in enumerate(pos):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        val = _kr(rows, r)
        if val > best and is_free(Graph(n, tuple(rows)), pat):
            best, best_rows = val, rows
    nodes = mask + 1
    return _finish(n, r, pat, best, best_rows, nodes, t0, NAIVE, complete)


def ex_profile(n: int, rmax: int, pat: Pattern, **kwargs) -> list[int]:
    """``[ex(n, K_0, F), ..., ex(n, K_rmax, F)]`` with the conventions
    ``ex(n, K_0, F) = 1`` and ``ex(n, K_1, F) = n``."""
    out = []
    for i in range(rmax + 1):
        if i == 0:
            out.append(1)
        elif i == 1:
            out.append(n)
        else:
            res = extremal_number(n, i, pat, **kwargs)
            if not res.complete:
                raise IncompleteSearchError(f"ex({n}, K_{i}, {pat}) timed out")
            out.append(res.value)
    return out

