# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels, limited to 64 vertices (one machine word per row).

Results match ``_pykernels`` exactly; the dispatcher in ``kernels`` routes
larger inputs to the Python versions.
"""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int _pop(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int _load(list rows, uint64_t* out) except -1:
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i
    if n > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


def transitive_closure(list rows, int n):
    cdef uint64_t r[MAXN]
    cdef int i, k
    cdef uint64_t bk, rk
    _load(rows, r)
    for k in range(n):
        bk = (<uint64_t>1) << k
        rk = r[k]
        for i in range(n):
            if r[i] & bk:
                r[i] |= rk
    return [r[i] for i in range(n)]


cdef void _grow(const uint64_t* adj, uint64_t cand, uint64_t cur, int size,
                uint64_t* best, int* best_size) nogil:
    cdef uint64_t bit
    cdef int v
    if size > best_size[0]:
        best_size[0] = size
        best[0] = cur
    while cand:
        if size + _pop(cand) <= best_size[0]:
            return
        v = _ctz(cand)
        bit = (<uint64_t>1) << v
        _grow(adj, cand & adj[v], cur | bit, size + 1, best, best_size)
        cand &= ~bit


def max_clique(list adj, cand):
    cdef uint64_t a[MAXN]
    cdef uint64_t best = 0
    cdef int best_size = 0
    _load(adj, a)
    _grow(a, <uint64_t>cand, 0, 0, &best, &best_size)
    return best


cdef uint64_t _search(const uint64_t* adj, uint64_t cand, uint64_t cur, int size, int k,
                      uint64_t skip_a, uint64_t skip_b) nogil:
    cdef uint64_t bit, found
    cdef int v
    if size == k:
        if cur == skip_a or cur == skip_b:
            return 0
        return cur
    while cand:
        if size + _pop(cand) < k:
            return 0
        v = _ctz(cand)
        bit = (<uint64_t>1) << v
        found = _search(adj, cand & adj[v], cur | bit, size + 1, k, skip_a, skip_b)
        if found:
            return found
        cand &= ~bit
    return 0


def first_clique_of_size(list adj, cand, int k, skip_a, skip_b):
    cdef uint64_t a[MAXN]
    if k <= 0:
        return 0
    _load(adj, a)
    return _search(a, <uint64_t>cand, 0, 0, k, <uint64_t>skip_a, <uint64_t>skip_b)


cdef int _best_removal(const uint64_t* adj, const uint8_t* f, uint64_t s,
                       uint64_t cand, uint64_t removed) nogil:
    cdef int best = f[s & ~removed]
    cdef int val, u
    cdef uint64_t bit
    while cand:
        u = _ctz(cand)
        bit = (<uint64_t>1) << u
        cand &= ~bit
        val = _best_removal(adj, f, s, cand & adj[u], removed | bit)
        if val < best:
            best = val
    return best


def min_clique_partition(list adj, int n):
    cdef uint64_t a[MAXN]
    cdef uint64_t full, s, low
    cdef int v
    cdef uint8_t* f
    if n > 24:
        raise ValueError("subset DP limited to 24 vertices")
    _load(adj, a)
    full = ((<uint64_t>1) << n) - 1
    f = <uint8_t*>malloc((full + 1) * sizeof(uint8_t))
    if f == NULL:
        raise MemoryError()
    try:
        with nogil:
            f[0] = 0
            s = 1
            while s <= full:
                low = s & (~s + 1)
                v = _ctz(low)
                f[s] = 1 + _best_removal(a, f, s, s & a[v], low)
                s += 1
        return f[full]
    finally:
        free(f)
