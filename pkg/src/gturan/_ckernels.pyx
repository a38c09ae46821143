# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same contract as ``_pykernels``."""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef uint64_t INT64_MAX = 9223372036854775807ULL
cdef uint64_t OVERFLOW = 0xFFFFFFFFFFFFFFFFULL


cdef uint64_t _binom(uint64_t c, uint64_t d) nogil:
    # OVERFLOW when the value exceeds INT64_MAX
    cdef u128 acc = 1
    cdef uint64_t i
    if d > c:
        return 0
    if d > c - d:
        d = c - d
    for i in range(d):
        acc = acc * (c - i) // (i + 1)
        if acc > <u128> INT64_MAX:
            return OVERFLOW
    return <uint64_t> acc


cdef uint64_t* _pack_rows(rows, Py_ssize_t n, Py_ssize_t W) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc(max(n * W, 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t v, w
    cdef bytes raw
    cdef const unsigned char* p
    for v in range(n):
        raw = (<object> rows[v]).to_bytes(W * 8, "little")
        p = raw
        for w in range(W):
            out[v * W + w] = (<uint64_t*> (p + 8 * w))[0]
    return out


cdef inline int _popcount(const uint64_t* x, Py_ssize_t lo, Py_ssize_t W) nogil:
    cdef int c = 0
    cdef Py_ssize_t w
    for w in range(lo, W):
        c += __builtin_popcountll(x[w])
    return c


cdef bint _is_clique(const uint64_t* fwd, const uint64_t* cand, Py_ssize_t lo, Py_ssize_t W) nogil:
    # every later member of cand must be a forward neighbour of every earlier one
    cdef Py_ssize_t w, k, u
    cdef uint64_t bits, above
    cdef const uint64_t* row
    for w in range(lo, W):
        bits = cand[w]
        while bits:
            u = w * 64 + __builtin_ctzll(bits)
            bits &= bits - 1
            row = fwd + u * W
            if bits & ~row[w]:
                return False
            for k in range(w + 1, W):
                if cand[k] & ~row[k]:
                    return False
    return True


cdef struct Ctx:
    const uint64_t* fwd
    Py_ssize_t W
    uint64_t* scratch
    int overflow
    uint64_t* counts
    int rmax


cdef uint64_t _count(Ctx* ctx, const uint64_t* cand, Py_ssize_t lo, int depth, int level) nogil:
    # depth = vertices still to choose from cand; words below lo are zero
    cdef Py_ssize_t W = ctx.W
    if depth == 1:
        return _popcount(cand, lo, W)
    cdef uint64_t total = 0, sub, bits
    if _is_clique(ctx.fwd, cand, lo, W):
        total = _binom(_popcount(cand, lo, W), depth)
        if total == OVERFLOW:
            ctx.overflow = 1
            return 0
        return total
    cdef uint64_t* nxt = ctx.scratch + level * W
    cdef const uint64_t* row
    cdef Py_ssize_t w, k, u
    for w in range(lo, W):
        bits = cand[w]
        while bits:
            u = w * 64 + __builtin_ctzll(bits)
            bits &= bits - 1
            row = ctx.fwd + u * W
            for k in range(w, W):
                nxt[k] = cand[k] & row[k]
            if _popcount(nxt, w, W) >= depth - 1:
                sub = _count(ctx, nxt, w, depth - 1, level + 1)
                if total > INT64_MAX - sub:
                    ctx.overflow = 1
                    return 0
                total += sub
            if ctx.overflow:
                return 0
    return total


def clique_count(fwd, int r):
    cdef Py_ssize_t n = len(fwd)
    if r == 0:
        return 1
    if r == 1:
        return n
    cdef Py_ssize_t W = max((n + 63) // 64, 1)
    cdef Ctx ctx
    cdef uint64_t* rows = _pack_rows(fwd, n, W)
    ctx.fwd = rows
    ctx.W = W
    ctx.overflow = 0
    ctx.scratch = <uint64_t*> malloc((r + 1) * W * sizeof(uint64_t))
    cdef uint64_t total = 0, sub
    cdef Py_ssize_t v
    try:
        if ctx.scratch == NULL:
            raise MemoryError()
        for v in range(n):
            if _popcount(rows + v * W, 0, W) >= r - 1:
                sub = _count(&ctx, rows + v * W, v // 64, r - 1, 0)
                if ctx.overflow or total > INT64_MAX - sub:
                    raise OverflowError("clique count exceeds 2^63 - 1")
                total += sub
    finally:
        free(rows)
        free(ctx.scratch)
    return total


cdef void _profile(Ctx* ctx, const uint64_t* cand, Py_ssize_t lo, int size) nogil:
    cdef Py_ssize_t W = ctx.W
    cdef int rmax = ctx.rmax
    cdef uint64_t add
    cdef int i
    if _is_clique(ctx.fwd, cand, lo, W):
        # the current clique extended by any subset of cand
        for i in range(rmax - size + 1):
            add = _binom(_popcount(cand, lo, W), i)
            if add == OVERFLOW or ctx.counts[size + i] > INT64_MAX - add:
                ctx.overflow = 1
                return
            ctx.counts[size + i] += add
        return
    ctx.counts[size] += 1
    if size + 1 == rmax:
        add = _popcount(cand, lo, W)
        if ctx.counts[rmax] > INT64_MAX - add:
            ctx.overflow = 1
        ctx.counts[rmax] += add
        return
    cdef uint64_t* nxt = ctx.scratch + size * W
    cdef uint64_t bits
    cdef const uint64_t* row
    cdef Py_ssize_t w, k, u
    for w in range(lo, W):
        bits = cand[w]
        while bits:
            u = w * 64 + __builtin_ctzll(bits)
            bits &= bits - 1
            row = ctx.fwd + u * W
            for k in range(w, W):
                nxt[k] = cand[k] & row[k]
            _profile(ctx, nxt, w, size + 1)
            if ctx.overflow:
                return


def clique_profile(fwd, int rmax):
    cdef Py_ssize_t n = len(fwd)
    counts = [0] * (rmax + 1)
    counts[0] = 1
    if rmax == 0:
        return counts
    if rmax == 1:
        counts[1] = n
        return counts
    cdef Py_ssize_t W = max((n + 63) // 64, 1)
    cdef Ctx ctx
    cdef uint64_t* rows = _pack_rows(fwd, n, W)
    ctx.fwd = rows
    ctx.W = W
    ctx.overflow = 0
    ctx.rmax = rmax
    ctx.scratch = <uint64_t*> malloc((rmax + 1) * W * sizeof(uint64_t))
    ctx.counts = <uint64_t*> malloc((rmax + 1) * sizeof(uint64_t))
    cdef Py_ssize_t v
    cdef int s
    try:
        if ctx.scratch == NULL or ctx.counts == NULL:
            raise MemoryError()
        for s in range(rmax + 1):
            ctx.counts[s] = 0
        for v in range(n):
            _profile(&ctx, rows + v * W, v // 64, 1)
            if ctx.overflow or ctx.counts[1] > INT64_MAX:
                raise OverflowError("clique count exceeds 2^63 - 1")
        for s in range(1, rmax + 1):
            counts[s] = ctx.counts[s]
    finally:
        free(rows)
        free(ctx.scratch)
        free(ctx.counts)
    return counts


cdef struct CanonCtx:
    int n
    uint64_t rows[32]
    uint64_t target[32]
    uint64_t colval[33][32]


cdef inline bint _twins(CanonCtx* c, int x, int y) nogil:
    return (c.rows[x] & ~(1ULL << y)) == (c.rows[y] & ~(1ULL << x))


cdef bint _canon(CanonCtx* c, int j, uint64_t remaining) nogil:
    if j == c.n:
        return True
    cdef uint64_t goal = c.target[j]
    cdef int tried[32]
    cdef int ntried = 0, t, w, x
    cdef bint skip
    cdef uint64_t rem = remaining, cv, row
    cdef uint64_t* col = c.colval[j]
    cdef uint64_t* nxt = c.colval[j + 1]
    while rem:
        w = __builtin_ctzll(rem)
        rem &= rem - 1
        cv = col[w]
        if cv > goal:
            return False
        if cv < goal:
            continue
        skip = False
        for t in range(ntried):
            if _twins(c, w, tried[t]):
                skip = True
                break
        if skip:
            continue
        tried[ntried] = w
        ntried += 1
        row = c.rows[w]
        for x in range(c.n):
            nxt[x] = (col[x] << 1) | ((row >> x) & 1)
        if not _canon(c, j + 1, remaining & ~(1ULL << w)):
            return False
    return True


def is_canonical(rows, int n):
    if n > 32:
        raise ValueError("canonicity kernel supports n <= 32")
    cdef CanonCtx c
    cdef int i, j
    cdef uint64_t v
    c.n = n
    for j in range(n):
        c.rows[j] = rows[j]
    for j in range(n):
        v = 0
        for i in range(j):
            v = (v << 1) | ((c.rows[j] >> i) & 1)
        c.target[j] = v
        c.colval[0][j] = 0
    if n == 0:
        return True
    return _canon(&c, 0, (1ULL << n) - 1 if n < 64 else ~0ULL)
