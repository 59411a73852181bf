# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirrors gridshadow._purekernels exactly.

Graph kernels use uint64 bitsets and therefore accept at most 64 vertices.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int ctz64(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


def sieve_segment(long long lo, Py_ssize_t size, base_primes):
    cdef bytearray flags = bytearray(b"\x01") * size
    cdef unsigned char[::1] f = flags
    cdef long long hi = lo + size
    cdef long long p, start, m
    cdef Py_ssize_t i
    for i in range(min(size, max(0, 2 - lo))):
        f[i] = 0
    for q in base_primes:
        p = q
        if p * p >= hi:
            break
        start = ((lo + p - 1) // p) * p
        if start < p * p:
            start = p * p
        m = start - lo
        while m < size:
            f[m] = 0
            m += p
    return flags


cdef long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def grid_adjacency(int w, int h):
    cdef Py_ssize_t cols = h + 1
    cdef Py_ssize_t n = (w + 1) * cols
    cdef bytearray mat = bytearray(n * n)
    cdef unsigned char[::1] m = mat
    cdef Py_ssize_t u, v
    with nogil:
        for u in range(n):
            for v in range(u + 1, n):
                if _gcd(v // cols - u // cols, v % cols - u % cols) == 1:
                    m[u * n + v] = 1
                    m[v * n + u] = 1
    return mat


cdef struct CliqueState:
    uint64_t *adj
    int best
    uint64_t best_mask


cdef void _expand(CliqueState *st, uint64_t r_mask, int r_size, uint64_t cand) nogil:
    cdef int order[64]
    cdef int bound[64]
    cdef int count = 0, color = 0, idx, v
    cdef uint64_t uncolored = cand, q, bit, nc
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = ctz64(q)
            bit = (<uint64_t>1) << v
            q &= ~st.adj[v] & ~bit
            uncolored &= ~bit
            order[count] = v
            bound[count] = color
            count += 1
    idx = count - 1
    while idx >= 0:
        if r_size + bound[idx] <= st.best:
            return
        v = order[idx]
        bit = (<uint64_t>1) << v
        nc = cand & st.adj[v]
        if nc:
            _expand(st, r_mask | bit, r_size + 1, nc)
        elif r_size + 1 > st.best:
            st.best = r_size + 1
            st.best_mask = r_mask | bit
        cand &= ~bit
        idx -= 1


def max_clique(adj):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    if n == 0:
        return []
    cdef uint64_t masks[64]
    cdef int i
    for i in range(n):
        masks[i] = adj[i]
    cdef CliqueState st
    st.adj = masks
    st.best = 0
    st.best_mask = 0
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    with nogil:
        _expand(&st, 0, 0, full)
    return [v for v in range(n) if (st.best_mask >> v) & 1]


cdef struct ColorState:
    int n
    int k
    uint64_t *adj
    int *color
    int *cnt
    int *sat
    uint64_t uncolored


cdef int _pick(ColorState *st) nogil:
    cdef uint64_t q = st.uncolored
    cdef int v, best_v = -1, best_sat = -1, best_deg = -1, s, d
    while q:
        v = ctz64(q)
        q &= q - 1
        s = st.sat[v]
        d = popcount64(st.adj[v] & st.uncolored)
        if s > best_sat or (s == best_sat and d > best_deg):
            best_sat = s
            best_deg = d
            best_v = v
    return best_v


cdef int _solve(ColorState *st, int depth, int used) nogil:
    if depth == st.n:
        return 1
    cdef int v = _pick(st)
    cdef int k = st.k
    cdef int top = used if used < k - 1 else k - 1
    cdef int c, u
    cdef uint64_t q
    for c in range(top + 1):
        if st.cnt[v * k + c]:
            continue
        st.color[v] = c
        st.uncolored &= ~((<uint64_t>1) << v)
        q = st.adj[v]
        while q:
            u = ctz64(q)
            q &= q - 1
            if st.cnt[u * k + c] == 0:
                st.sat[u] += 1
            st.cnt[u * k + c] += 1
        if _solve(st, depth + 1, used + 1 if c == used else used):
            return 1
        q = st.adj[v]
        while q:
            u = ctz64(q)
            q &= q - 1
            st.cnt[u * k + c] -= 1
            if st.cnt[u * k + c] == 0:
                st.sat[u] -= 1
        st.uncolored |= (<uint64_t>1) << v
        st.color[v] = -1
    return 0


def k_coloring(adj, int k):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    if n == 0:
        return []
    if k <= 0:
        return None
    cdef uint64_t masks[64]
    cdef int i, found
    for i in range(n):
        masks[i] = adj[i]
    cdef ColorState st
    st.n = n
    st.k = k
    st.adj = masks
    st.color = <int *> malloc(n * sizeof(int))
    st.cnt = <int *> calloc(n * k, sizeof(int))
    st.sat = <int *> calloc(n, sizeof(int))
    if st.color == NULL or st.cnt == NULL or st.sat == NULL:
        free(st.color)
        free(st.cnt)
        free(st.sat)
        raise MemoryError()
    for i in range(n):
        st.color[i] = -1
    st.uncolored = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    try:
        with nogil:
            found = _solve(&st, 0, 0)
        if not found:
            return None
        return [st.color[i] for i in range(n)]
    finally:
        free(st.color)
        free(st.cnt)
        free(st.sat)
