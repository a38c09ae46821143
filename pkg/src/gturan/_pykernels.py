"""Pure-Python kernels.  Same contract as the compiled ``_ckernels`` module."""
from __future__ import annotations

from math import comb
from typing import Sequence

INT64_MAX = (1 << 63) - 1

BACKEND = "python"


def _check(total: int) -> int:
    if total > INT64_MAX:
        raise OverflowError("clique count exceeds 2^63 - 1")
    return total


def _is_clique(fwd: Sequence[int], cand: int) -> bool:
    """Every later member of ``cand`` is a forward neighbour of every earlier one."""
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        if rest & ~fwd[low.bit_length() - 1]:
            return False
    return True


def clique_count(fwd: Sequence[int], r: int) -> int:
    """Number of ``r``-cliques given forward-neighbourhood rows.

    ``fwd[v]`` holds the neighbours of ``v`` that come later in a fixed
    vertex order, so every clique is counted once from its first vertex.
    """
    n = len(fwd)
    if r == 0:
        return 1
    if r == 1:
        return n

    def rec(cand: int, depth: int) -> int:
        # depth = vertices still to choose from cand
        if depth == 1:
            return cand.bit_count()
        if _is_clique(fwd, cand):
            return comb(cand.bit_count(), depth)
        total = 0
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            nxt = cand & fwd[u]
            if nxt.bit_count() >= depth - 1:
                total += rec(nxt, depth - 1)
        return total

    total = 0
    for v in range(n):
        if fwd[v].bit_count() >= r - 1:
            total += rec(fwd[v], r - 1)
    return _check(total)


def clique_profile(fwd: Sequence[int], rmax: int) -> list[int]:
    """``[k_0, ..., k_rmax]`` in a single traversal."""
    counts = [0] * (rmax + 1)
    counts[0] = 1
    if rmax == 0:
        return counts
    n = len(fwd)

    def rec(cand: int, size: int) -> None:
        # a clique of ``size`` vertices has just been formed
        if _is_clique(fwd, cand):
            c = cand.bit_count()
            for i in range(rmax - size + 1):
                counts[size + i] += comb(c, i)
            return
        counts[size] += 1
        if size + 1 == rmax:
            counts[rmax] += cand.bit_count()
            return
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            rec(cand & fwd[u], size + 1)

    if rmax == 1:
        counts[1] = n
        return counts
    for v in range(n):
        rec(fwd[v], 1)
    for c in counts:
        _check(c)
    return counts


def is_canonical(rows: Sequence[int], n: int) -> bool:
    """True iff the adjacency code of ``rows`` is maximal over all relabellings.

    The code lists the upper triangle column by column, ``x(0,1) x(0,2) x(1,2)
    x(0,3) ...``, first position most significant.  Vertices that are twins
    (same neighbourhood apart from each other) give isomorphic subtrees, so
    only one of each twin pair is expanded per level.
    """
    target = [0] * n
    for j in range(n):
        c = 0
        for i in range(j):
            c = c << 1 | (rows[j] >> i & 1)
        target[j] = c

    def twins(x: int, y: int) -> bool:
        return rows[x] & ~(1 << y) == rows[y] & ~(1 << x)

    def rec(j: int, remaining: int, colval: list[int]) -> bool:
        if j == n:
            return True
        goal = target[j]
        tried: list[int] = []
        rem = remaining
        while rem:
            low = rem & -rem
            w = low.bit_length() - 1
            rem ^= low
            c = colval[w]
            if c > goal:
                return False
            if c < goal or any(twins(w, t) for t in tried):
                continue
            tried.append(w)
            row = rows[w]
            nxt = [(colval[x] << 1) | (row >> x & 1) for x in range(n)]
            if not rec(j + 1, remaining ^ low, nxt):
                return False
        return True

    return rec(0, (1 << n) - 1, [0] * n)
