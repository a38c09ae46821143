"""Projective norm graphs H(q, a).

Vertices are pairs ``(X, x)`` with ``X`` in GF(q^(a-1)) and ``x`` in GF(q)*.
Two distinct vertices ``(X, x)`` and ``(Y, y)`` are adjacent iff
``N(X + Y) = x * y`` where ``N`` is the norm down to GF(q).  The graph is
K_{a,(a-1)!+1}-free.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import (
    FieldSpec,
    field_make,
    field_mul,
    prime_power,
    primitive_element,
)
from .graph import MAX_VERTICES, Graph, GraphSizeError

RULES = ("projective",)


@dataclass
class FieldTables:
    """Log/antilog tables of GF(p^m) indexed by the base-p integer encoding."""

    spec: FieldSpec
    exp: np.ndarray  # exp[i] = g^i, i = 0..order-2
    log: np.ndarray  # log[exp[i]] = i; log[0] unused
    digits: np.ndarray  # digits[k] = coefficient vector of element k

    @classmethod
    def build(cls, spec: FieldSpec) -> "FieldTables":
        Q = spec.order
        g = primitive_element(spec)
        exp = np.zeros(Q - 1, dtype=np.int64)
        log = np.full(Q, -1, dtype=np.int64)
        x = spec.one
        for i in range(Q - 1):
            k = spec.to_int(x)
            exp[i] = k
            log[k] = i
            x = field_mul(spec, x, g)
        idx = np.arange(Q)
        digits = np.stack([(idx // spec.p**i) % spec.p for i in range(spec.m)], axis=1)
        return cls(spec, exp, log, digits)

    def add_row(self, k: int) -> np.ndarray:
        """Encodings of ``element(k) + element(j)`` for every ``j``."""
        p = self.spec.p
        s = (self.digits + self.digits[k]) % p
        weights = p ** np.arange(self.spec.m)
        return s @ weights


def norm_graph_order(q: int, a: int) -> int:
    return q ** (a - 1) * (q - 1)


def norm_graph(q: int, a: int, rule: str = "projective") -> Graph:
    """H(q, a) on ``q^(a-1) (q-1)`` vertices.

    Vertex ``(X, x)`` gets index ``X * (q-1) + j`` where ``X`` is the integer
    encoding of the big-field element and ``x = g^((Q-1)/(q-1) * j)`` for the
    primitive element ``g`` of GF(Q), ``Q = q^(a-1)``.
    """
    if rule not in RULES:
        raise ValueError(f"unknown norm-graph rule {rule!r}; known: {RULES}")
    p, e = prime_power(q)
    if a < 2:
        raise ValueError("a must be at least 2")
    n = norm_graph_order(q, a)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"H({q},{a}) has {n} vertices, above the cap of {MAX_VERTICES}")
    spec = field_make(p, e * (a - 1))
    tables = FieldTables.build(spec)
    Q = spec.order
    h = q - 1
    # N(Z) = g^((Q-1)/(q-1) * (log Z mod (q-1))); x*y adds subfield exponents
    rows = []
    for X in range(Q):
        Z = tables.add_row(X)
        nonzero = Z != 0
        Ys = np.nonzero(nonzero)[0]
        nl = tables.log[Z[nonzero]] % h
        for jx in range(h):
            adj = np.zeros(n, dtype=bool)
            jy = (nl - jx) % h
            adj[Ys * h + jy] = True
            adj[X * h + jx] = False
            rows.append(int.from_bytes(np.packbits(adj, bitorder="little").tobytes(), "little"))
    return Graph(n, tuple(rows))
