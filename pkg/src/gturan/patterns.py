"""Forbidden-structure patterns, containment tests and disjoint-copy packings.

Containment is as a (not necessarily induced) subgraph.  Every search takes
an ``allowed`` vertex mask so the same routines serve packings, which look
for further copies in what is left of the host.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle,
    disjoint_union,
    iter_bits,
    mask_of,
    path,
    popcount,
)


class PatternError(ValueError):
    pass


class PatternSyntaxError(PatternError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class CertificationError(AssertionError):
    """A produced witness or construction failed its own re-check."""


# -- pattern types ----------------------------------------------------------------


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise PatternError("K(a,b) needs a, b >= 1")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def order(self) -> int:
        return self.a + self.b

    def graph(self) -> Graph:
        return complete_bipartite(self.a, self.b)

    def __str__(self) -> str:
        return f"K({self.a},{self.b})"


@dataclass(frozen=True)
class EvenCycle:
    length: int

    def __post_init__(self) -> None:
        if self.length < 4 or self.length % 2:
            raise PatternError(f"even cycles of length >= 4 only, got {self.length}")

    @property
    def order(self) -> int:
        return self.length

    def graph(self) -> Graph:
        return cycle(self.length)

    def __str__(self) -> str:
        return f"C{self.length}"


@dataclass(frozen=True)
class Path:
    length: int  # number of vertices

    def __post_init__(self) -> None:
        if self.length < 1:
            raise PatternError("paths need at least one vertex")

    @property
    def order(self) -> int:
        return self.length

    def graph(self) -> Graph:
        return path(self.length)

    def __str__(self) -> str:
        return f"P{self.length}"


@dataclass(frozen=True)
class Clique:
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise PatternError("cliques need at least one vertex")

    @property
    def order(self) -> int:
        return self.r

    def graph(self) -> Graph:
        return complete_graph(self.r)

    def __str__(self) -> str:
        return f"K{self.r}"


@dataclass(frozen=True)
class Arbitrary:
    host: Graph

    def __post_init__(self) -> None:
        if self.host.n < 1:
            raise PatternError("pattern graph needs at least one vertex")

    @property
    def order(self) -> int:
        return self.host.n

    def graph(self) -> Graph:
        return self.host

    def __str__(self) -> str:
        from .graph6 import to_graph6

        return f"G[{to_graph6(self.host).decode()}]"


BasePattern = Union[CompleteBipartite, EvenCycle, Path, Clique, Arbitrary]


@dataclass(frozen=True)
class DisjointCopies:
    t: int
    inner: "Pattern"

    def __post_init__(self) -> None:
        if self.t < 1:
            raise PatternError("copy count must be at least 1")
        if isinstance(self.inner, DisjointCopies):
            object.__setattr__(self, "t", self.t * self.inner.t)
            object.__setattr__(self, "inner", self.inner.inner)

    @property
    def order(self) -> int:
        return self.t * self.inner.order

    def graph(self) -> Graph:
        return disjoint_union(self.t, self.inner.graph())

    def __str__(self) -> str:
        return f"{self.t}*{self.inner}"


Pattern = Union[BasePattern, DisjointCopies]


@dataclass(frozen=True)
class Witness:
    """One vertex list per copy found, in the pattern's own vertex order."""

    embeddings: tuple[tuple[int, ...], ...]

    def vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(e) for e in self.embeddings]


# -- DSL ----------------------------------------------------------------------------

_TOKEN = re.compile(r"([0-9]+)|([KCP])|([(),*])")


def parse_pattern(text: str) -> Pattern:
    """Parse ``[INT "*"] base`` with ``base`` one of ``K<r>``, ``K(<a>,<b>)``,
    ``C<2k>`` or ``P<l>``; whitespace is ignored."""
    # offsets are byte offsets; any non-ASCII byte is rejected where it occurs
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PatternSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = "int" if m.group(1) else "letter" if m.group(2) else "punct"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    end = len(text)
    i = 0

    def peek() -> tuple[str, str, int]:
        return tokens[i] if i < len(tokens) else ("eof", "", end)

    def take(kind: str, value: str | None = None) -> str:
        nonlocal i
        k, v, off = peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else ("integer" if kind == "int" else kind)
            got = v if k != "eof" else "end of input"
            raise PatternSyntaxError(f"expected {want}, got {got!r}", off)
        i += 1
        return v

    copies = None
    if peek()[0] == "int":
        copies_off = peek()[2]
        copies = int(take("int"))
        take("punct", "*")
        if copies < 1:
            raise PatternSyntaxError("copy count must be at least 1", copies_off)

    _, letter, letter_off = peek()
    take("letter")
    try:
        if letter == "K" and peek()[:2] == ("punct", "("):
            take("punct", "(")
            a = int(take("int"))
            take("punct", ",")
            b = int(take("int"))
            take("punct", ")")
            base: Pattern = CompleteBipartite(a, b)
        else:
            num_off = peek()[2]
            num = int(take("int"))
            if letter == "K":
                base = Clique(num)
            elif letter == "P":
                base = Path(num)
            else:
                if num < 3:
                    raise PatternSyntaxError(f"cycle length {num} < 3", num_off)
                if num % 2:
                    raise PatternSyntaxError(
                        f"C{num}: even cycles only (odd cycles are not supported)", num_off
                    )
                base = EvenCycle(num)
    except PatternSyntaxError:
        raise
    except PatternError as exc:
        raise PatternSyntaxError(str(exc), letter_off) from None
    if peek()[0] != "eof":
        raise PatternSyntaxError(f"trailing input {peek()[1]!r}", peek()[2])
    return DisjointCopies(copies, base) if copies is not None else base


# -- single-copy searches -----------------------------------------------------------


def _lowest(mask: int, k: int) -> list[int]:
    out = []
    for v in iter_bits(mask):
        if len(out) == k:
            break
        out.append(v)
    return out


def _find_clique(rows, r: int, allowed: int):
    def rec(chosen: list[int], cand: int):
        if len(chosen) == r:
            return chosen
        need = r - len(chosen)
        while popcount(cand) >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = rec(chosen + [v], cand & rows[v])
            if found:
                return found
        return None

    return rec([], allowed)


def _find_kab(rows, a: int, b: int, allowed: int):
    # choose the a-side in increasing order; its common neighbourhood hosts the b-side
    def rec(chosen: list[int], cand: int, common: int):
        if len(chosen) == a:
            return chosen + _lowest(common, b)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            c2 = common & rows[v]
            if popcount(c2) >= b:
                found = rec(chosen + [v], cand, c2)
                if found:
                    return found
        return None

    return rec([], allowed, allowed)


def cycle_through_edge(rows, u: int, v: int, length: int, allowed: int):
    """A cycle ``[u, v, ..., w]`` of exactly ``length`` vertices using edge ``uv``.

    Intermediate vertices are drawn from ``allowed``.  Returns ``None`` if no
    such cycle exists.
    """
    end_nbrs = rows[u] & allowed & ~(1 << v) & ~(1 << u)

    def rec(trail: list[int], used: int, cur: int, steps: int):
        # steps = vertices still to add; the last one must be adjacent to u
        if steps == 1:
            cand = rows[cur] & end_nbrs & ~used
            return trail + [(cand & -cand).bit_length() - 1] if cand else None
        cand = rows[cur] & allowed & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            found = rec(trail + [w], used | low, w, steps - 1)
            if found:
                return found
        return None

    if length < 3 or not rows[u] >> v & 1:
        return None
    return rec([u, v], (1 << u) | (1 << v), v, length - 2)


def _find_cycle(rows, length: int, allowed: int):
    # each cycle is found from its minimum vertex u
    for u in iter_bits(allowed):
        higher = allowed >> (u + 1) << (u + 1)
        nu = rows[u] & higher
        if popcount(nu) < 2:
            continue
        for v in iter_bits(nu):
            found = cycle_through_edge(rows, u, v, length, higher)
            if found:
                return found
    return None


def _find_path(rows, length: int, allowed: int):
    def rec(trail: list[int], used: int, cur: int):
        if len(trail) == length:
            return trail
        cand = rows[cur] & allowed & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            found = rec(trail + [w], used | low, w)
            if found:
                return found
        return None

    for s in iter_bits(allowed):
        found = rec([s], 1 << s, s)
        if found:
            return found
    return None


def _search_order(h: Graph) -> list[int]:
    """Pattern vertices ordered so each has many already-placed neighbours."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda x: (popcount(h.rows[x] & placed), h.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _find_embedding(rows, h: Graph, allowed: int):
    order = _search_order(h)
    degs = [popcount(r) for r in rows]
    deg_ok = [mask_of(v for v in iter_bits(allowed) if degs[v] >= h.degree(p)) for p in range(h.n)]
    image = [-1] * h.n

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        p = order[i]
        cand = deg_ok[p] & ~used
        for q in iter_bits(h.rows[p]):
            if image[q] >= 0:
                cand &= rows[image[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[p] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        image[p] = -1
        return False

    return list(image) if rec(0, 0) else None


def _find(g: Graph, pat: BasePattern, allowed: int):
    if popcount(allowed) < pat.order:
        return None
    rows = g.rows
    if isinstance(pat, Clique):
        return _find_clique(rows, pat.r, allowed)
    if isinstance(pat, CompleteBipartite):
        return _find_kab(rows, pat.a, pat.b, allowed)
    if isinstance(pat, EvenCycle):
        return _find_cycle(rows, pat.length, allowed)
    if isinstance(pat, Path):
        return _find_path(rows, pat.length, allowed)
    if isinstance(pat, Arbitrary):
        return _find_embedding(rows, pat.host, allowed)
    raise TypeError(f"not a base pattern: {pat!r}")


def _connected(h: Graph) -> bool:
    return h.components() == 1


def _host_sets_through(g: Graph, pat: BasePattern, v: int, allowed: int) -> Iterator[int]:
    """Vertex sets of size ``pat.order`` that contain ``v``, lie in ``allowed``
    (whose lowest vertex is ``v``) and host a copy of ``pat``."""
    k = pat.order
    rows = g.rows
    higher = allowed >> (v + 1) << (v + 1)
    if isinstance(pat, Arbitrary) and not _connected(pat.host):
        for rest in combinations(list(iter_bits(higher)), k - 1):
            s = mask_of(rest) | (1 << v)
            if _find(g, pat, s) is not None:
                yield s
        return

    # ESU enumeration of connected vertex sets containing v
    def extend(sub: int, size: int, ext: int, closed: int) -> Iterator[int]:
        if size == k:
            if _find(g, pat, sub) is not None:
                yield sub
            return
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            excl = rows[w] & higher & ~closed
            yield from extend(sub | low, size + 1, ext | excl, closed | rows[w] | low)

    start = 1 << v
    yield from extend(start, 1, rows[v] & higher, rows[v] | start)


def _pack(g: Graph, pat: BasePattern, allowed: int, need: int, memo: dict):
    """A list of ``need`` pairwise disjoint copies inside ``allowed`` or ``None``."""
    if need == 0:
        return []
    if popcount(allowed) < need * pat.order:
        return None
    key = (allowed, need)
    if key in memo:
        return memo[key]
    if need == 1:
        found = _find(g, pat, allowed)
        result = [found] if found is not None else None
        memo[key] = result
        return result
    v = (allowed & -allowed).bit_length() - 1
    rest = allowed ^ (1 << v)
    result = None
    # any copy through v leaves need-1 copies in allowed - v; if even that fails, so does need
    if _pack(g, pat, rest, need - 1, memo) is not None:
        for s in _host_sets_through(g, pat, v, allowed):
            tail = _pack(g, pat, allowed & ~s, need - 1, memo)
            if tail is not None:
                result = [_find(g, pat, s)] + tail
                break
        if result is None:
            result = _pack(g, pat, rest, need, memo)
    memo[key] = result
    return result


# -- public API -----------------------------------------------------------------


def embedding_ok(g: Graph, h: Graph, emb) -> bool:
    """True iff ``emb`` maps vertices of ``h`` injectively onto host vertices
    such that every edge of ``h`` lands on an edge of ``g``."""
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in emb):
        return False
    return all(g.has_edge(emb[i], emb[j]) for i, j in h.edges())


def verify_witness(g: Graph, pat: Pattern, witness: Witness) -> bool:
    inner = pat.inner if isinstance(pat, DisjointCopies) else pat
    h = inner.graph()
    seen: set[int] = set()
    for emb in witness.embeddings:
        if not embedding_ok(g, h, emb) or seen & set(emb):
            return False
        seen |= set(emb)
    return True


def _certified(g: Graph, pat: Pattern, embeddings) -> Witness:
    w = Witness(tuple(tuple(e) for e in embeddings))
    if not verify_witness(g, pat, w):
        raise CertificationError(f"witness {w} does not embed {pat}")
    return w


def contains(g: Graph, pat: Pattern) -> Witness | None:
    """A witness copy of ``pat`` in ``g``, or ``None`` if ``g`` is ``pat``-free."""
    if isinstance(pat, DisjointCopies):
        found = _pack(g, pat.inner, g.vertex_mask, pat.t, {})
        return None if found is None else _certified(g, pat, found)
    found = _find(g, pat, g.vertex_mask)
    return None if found is None else _certified(g, pat, [found])


def is_free(g: Graph, pat: Pattern) -> bool:
    return contains(g, pat) is None


def max_disjoint_copies(g: Graph, pat: Pattern, cap: int) -> tuple[int, Witness]:
    """``min(cap, maximum number of pairwise vertex-disjoint copies)`` and a
    packing of that size.

    For ``pat = t*F`` the copies counted are copies of ``t*F``; the witness
    lists the underlying copies of ``F``.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if isinstance(pat, DisjointCopies):
        inner, per = pat.inner, pat.t
    else:
        inner, per = pat, 1
    memo: dict = {}
    best: list = []
    for m in range(1, cap + 1):
        found = _pack(g, inner, g.vertex_mask, m * per, memo)
        if found is None:
            break
        best = found
    return len(best) // per, _certified(g, DisjointCopies(1, inner), best)


def greedy_disjoint_copies(g: Graph, pat: BasePattern) -> int:
    """Copies found by repeatedly taking the first copy and deleting its vertices."""
    allowed = g.vertex_mask
    count = 0
    while True:
        found = _find(g, pat, allowed)
        if found is None:
            return count
        count += 1
        allowed &= ~mask_of(found)


def pattern_graph(pat: Pattern) -> Graph:
    return pat.graph()
