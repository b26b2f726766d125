# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: the Gray-code Ryser sum and the memoized tiling counter.

Both mirror ``_pykernels`` exactly; results are plain Python ints.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport calloc, malloc, free
from libc.math cimport log2

cdef extern from *:
    """
    typedef __int128 i128;
    static inline int u64_add_overflow(unsigned long long a, unsigned long long b,
                                       unsigned long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static inline int ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    static inline unsigned long long lowest_zero(unsigned long long x) { return ~x & (x + 1); }
    #define CP_MAXN 64
    #define CP_PROBES 8
    #define CP_EMPTY 0xFFFFFFFFFFFFFFFFULL
    """
    const int MAXN "CP_MAXN"
    const int PROBES "CP_PROBES"
    const unsigned long long EMPTY "CP_EMPTY"
    ctypedef long long i128
    int u64_add_overflow(unsigned long long a, unsigned long long b, unsigned long long *out) nogil
    int ctz64(unsigned long long x) nogil
    unsigned long long lowest_zero(unsigned long long x) nogil

NAME = "compiled"


cdef object _i128_to_int(i128 x):
    cdef bint neg = x < 0
    if neg:
        x = -x
    cdef uint64_t lo = <uint64_t>x
    cdef uint64_t hi = <uint64_t>(x >> 64)
    val = (<object>hi << 64) | <object>lo
    return -val if neg else val


def ryser_partial(col_rows, int n, uint64_t start, uint64_t stop):
    """Signed Ryser sum over Gray-code indices ``start <= i < stop``."""
    if start >= stop:
        return 0
    if n > MAXN:
        raise OverflowError(f"compiled Ryser kernel supports n <= {MAXN}")
    # row sums never exceed the row degrees
    cdef int maxdeg = 1
    rowdeg = [0] * n
    for c in col_rows:
        for row in c:
            rowdeg[row] += 1
    if n:
        maxdeg = max(maxdeg, max(rowdeg))
    cdef int total_ones = sum(rowdeg)
    # every product is < (maxdeg+1)^n and there are at most stop-start terms
    if n * log2(maxdeg + 1.0) + log2(<double>(stop - start)) + 1.0 > 126.0:
        raise OverflowError("Ryser sum may exceed the 128-bit accumulator")

    cdef int *offs = <int *>malloc((n + 1) * sizeof(int))
    cdef int *rows = <int *>malloc((total_ones + 1) * sizeof(int))
    cdef int *rowsum = <int *>calloc(n, sizeof(int))
    cdef int *hist = <int *>calloc(n + 2, sizeof(int))
    cdef i128 *pw = <i128 *>malloc((maxdeg + 1) * (n + 1) * sizeof(i128))
    if not offs or not rows or not rowsum or not hist or not pw:
        free(offs); free(rows); free(rowsum); free(hist); free(pw)
        raise MemoryError()

    cdef int j, r, k, pos = 0, s, size = 0, cnt
    for j in range(n):
        offs[j] = pos
        for r in col_rows[j]:
            rows[pos] = r
            pos += 1
    offs[n] = pos
    for k in range(maxdeg + 1):
        pw[k * (n + 1)] = 1
        for cnt in range(1, n + 1):
            pw[k * (n + 1) + cnt] = pw[k * (n + 1) + cnt - 1] * k

    cdef uint64_t g = start ^ (start >> 1)
    cdef uint64_t i
    for j in range(n):
        if (g >> j) & 1:
            size += 1
            for pos in range(offs[j], offs[j + 1]):
                rowsum[rows[pos]] += 1
    for r in range(n):
        hist[rowsum[r]] += 1

    cdef i128 total = 0, prod
    with nogil:
        i = start
        while True:
            if hist[0] == 0:
                prod = 1
                for k in range(2, maxdeg + 1):
                    if hist[k]:
                        prod = prod * pw[k * (n + 1) + hist[k]]
                if size & 1:
                    total -= prod
                else:
                    total += prod
            i += 1
            if i >= stop:
                break
            j = ctz64(i)
            if (g >> j) & 1:
                size -= 1
                for pos in range(offs[j], offs[j + 1]):
                    r = rows[pos]
                    s = rowsum[r]
                    hist[s] -= 1
                    hist[s - 1] += 1
                    rowsum[r] = s - 1
            else:
                size += 1
                for pos in range(offs[j], offs[j + 1]):
                    r = rows[pos]
                    s = rowsum[r]
                    hist[s] -= 1
                    hist[s + 1] += 1
                    rowsum[r] = s + 1
            g ^= (<uint64_t>1) << j

    free(offs); free(rows); free(rowsum); free(hist); free(pw)
    return _i128_to_int(total)


# -- memoized tiling counter ---------------------------------------------

cdef struct Slot:
    uint64_t key
    uint64_t val

cdef struct Ctx:
    uint64_t full
    uint64_t *cands
    int *offs
    Slot *table
    uint64_t tmask
    bint overflow
    uint64_t evictions
    uint64_t stored


cdef inline uint64_t _mix(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    x *= 0xc4ceb9fe1a85ec53ULL
    x ^= x >> 33
    return x


cdef uint64_t _count(Ctx *ctx, uint64_t covered) nogil:
    if covered == ctx.full:
        return 1
    cdef uint64_t h = _mix(covered) & ctx.tmask
    cdef uint64_t idx
    cdef int p
    for p in range(PROBES):
        idx = (h + p) & ctx.tmask
        if ctx.table[idx].key == covered:
            return ctx.table[idx].val
        if ctx.table[idx].key == EMPTY:
            break
    cdef int v = ctz64(lowest_zero(covered))
    cdef uint64_t total = 0, sub, m
    cdef int q
    for q in range(ctx.offs[v], ctx.offs[v + 1]):
        m = ctx.cands[q]
        if m & covered == 0:
            sub = _count(ctx, covered | m)
            if u64_add_overflow(total, sub, &total):
                ctx.overflow = True
                return 0
    for p in range(PROBES):
        idx = (h + p) & ctx.tmask
        if ctx.table[idx].key == EMPTY:
            ctx.table[idx].key = covered
            ctx.table[idx].val = total
            ctx.stored += 1
            return total
    # all probe slots taken: evict the home slot
    ctx.table[h].key = covered
    ctx.table[h].val = total
    ctx.evictions += 1
    return total


def count_cover(int nvert, cands, uint64_t covered=0, int memo_bits=20):
    """Number of ways to tile the uncovered vertices with candidate sets.

    ``cands[v]`` holds the vertex bitsets of the allowed pieces whose lowest
    vertex is v.  The memo is a fixed-size open-addressing table of
    ``2**memo_bits`` slots; when a probe window is full the home slot is
    overwritten, which only costs recomputation.
    """
    if nvert > 64 or nvert < 1:
        raise ValueError("compiled counter supports 1..64 vertices")
    cdef Ctx ctx
    ctx.full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if nvert == 64 else (((<uint64_t>1) << nvert) - 1)
    cdef int total_c = sum(len(c) for c in cands)
    ctx.offs = <int *>malloc((nvert + 1) * sizeof(int))
    ctx.cands = <uint64_t *>malloc((total_c + 1) * sizeof(uint64_t))
    ctx.tmask = ((<uint64_t>1) << memo_bits) - 1
    ctx.table = <Slot *>malloc((ctx.tmask + 1) * sizeof(Slot))
    if not ctx.offs or not ctx.cands or not ctx.table:
        free(ctx.offs); free(ctx.cands); free(ctx.table)
        raise MemoryError(f"cannot allocate memo table of 2**{memo_bits} slots")
    cdef uint64_t t
    for t in range(ctx.tmask + 1):
        ctx.table[t].key = EMPTY
    cdef int v, pos = 0
    for v in range(nvert):
        ctx.offs[v] = pos
        for m in cands[v]:
            ctx.cands[pos] = m
            pos += 1
    ctx.offs[nvert] = pos
    ctx.overflow = False
    ctx.evictions = 0
    ctx.stored = 0
    cdef uint64_t res
    with nogil:
        res = _count(&ctx, covered)
    free(ctx.offs); free(ctx.cands); free(ctx.table)
    if ctx.overflow:
        raise OverflowError("tiling count exceeds 64 bits")
    return res
