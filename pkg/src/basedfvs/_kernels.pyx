# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels for the exact oracles.

Same functions and results as :mod:`basedfvs._kernels_py`; limited to
graphs with at most 63 vertices.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 63


cdef inline int ctz(u64 m) nogil:
    return __builtin_ctzll(m)


cdef inline int popcount(u64 m) nogil:
    return __builtin_popcountll(m)


cdef int _load(object adj_list, u64* adj) except -1:
    cdef Py_ssize_t n = len(adj_list)
    if n > MAXN:
        raise ValueError(f"compiled kernels support at most {MAXN} vertices, got {n}")
    for i in range(n):
        adj[i] = <u64>adj_list[i]
    return <int>n


def simple_cycles(adj_list, long cap):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    cdef int path[MAXN + 1]
    cdef u64 cand[MAXN + 1]
    cdef int depth, s, w, k
    cdef u64 on, allowed, c
    out = []
    for s in range(n):
        allowed = ~((<u64>2 << s) - 1)
        path[0] = s
        cand[0] = adj[s] & allowed
        on = <u64>1 << s
        depth = 0
        while depth >= 0:
            c = cand[depth]
            if c == 0:
                on &= ~(<u64>1 << path[depth])
                depth -= 1
                continue
            cand[depth] = c & (c - 1)
            w = ctz(c)
            depth += 1
            path[depth] = w
            on |= <u64>1 << w
            if depth >= 2 and (adj[w] >> s) & 1 and path[1] < w:
                out.append(tuple([path[k] for k in range(depth + 1)]))
                if len(out) > cap:
                    return None
            cand[depth] = adj[w] & allowed & ~on
    return out


cdef u64 _peel(const u64* adj, u64 alive) nogil:
    cdef bint changed = True
    cdef u64 m
    cdef int v
    while changed:
        changed = False
        m = alive
        while m:
            v = ctz(m)
            m &= m - 1
            if popcount(adj[v] & alive) <= 1:
                alive &= ~(<u64>1 << v)
                changed = True
    return alive


def peel(adj_list, alive):
    cdef u64 adj[MAXN]
    _load(adj_list, adj)
    return _peel(adj, <u64>alive)


def is_forest(adj_list, alive):
    cdef u64 adj[MAXN]
    _load(adj_list, adj)
    return _peel(adj, <u64>alive) == 0


cdef u64 _cycle_set(const u64* adj, u64 alive) nogil:
    cdef int parent[MAXN]
    cdef int queue[MAXN]
    cdef u64 seen, best = 0, found, nb, rs = alive
    cdef int best_size = 1 << 30, size
    cdef int r, head, tail, v, w, x
    while rs:
        r = ctz(rs)
        rs &= rs - 1
        seen = <u64>1 << r
        parent[r] = -1
        queue[0] = r
        head = 0
        tail = 1
        found = 0
        while head < tail and found == 0:
            v = queue[head]
            head += 1
            nb = adj[v] & alive
            while nb:
                w = ctz(nb)
                nb &= nb - 1
                if w == parent[v]:
                    continue
                if (seen >> w) & 1:
                    x = v
                    while x != -1:
                        found |= <u64>1 << x
                        x = parent[x]
                    x = w
                    while x != -1:
                        found |= <u64>1 << x
                        x = parent[x]
                    break
                seen |= <u64>1 << w
                parent[w] = v
                queue[tail] = w
                tail += 1
        if found:
            size = popcount(found)
            if size < best_size:
                best = found
                best_size = size
    return best


cdef bint _fvs_search(const u64* adj, u64 alive, int k, u64* out) nogil:
    cdef u64 cs
    cdef int v
    alive = _peel(adj, alive)
    if alive == 0:
        out[0] = 0
        return True
    if k == 0:
        return False
    cs = _cycle_set(adj, alive)
    while cs:
        v = ctz(cs)
        cs &= cs - 1
        if _fvs_search(adj, alive & ~(<u64>1 << v), k - 1, out):
            out[0] |= <u64>1 << v
            return True
    return False


def min_fvs(adj_list):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    cdef u64 full = (<u64>1 << n) - 1
    cdef u64 result = 0
    cdef int k
    for k in range(n + 1):
        if _fvs_search(adj, full, k, &result):
            return int(result)
    raise AssertionError("unreachable: deleting every vertex leaves a forest")


cdef struct PackCtx:
    u64* masks
    int* chosen
    int* best
    int nbest


cdef void _pack(PackCtx* ctx, const int* compat, int ncompat, int depth) nogil:
    cdef u64 cover = 0, low, mi
    cdef int i, j, k, t
    cdef int* buf
    if ncompat == 0:
        if depth > ctx.nbest:
            for t in range(depth):
                ctx.best[t] = ctx.chosen[t]
            ctx.nbest = depth
        return
    for t in range(ncompat):
        cover |= ctx.masks[compat[t]]
    if depth + popcount(cover) // 3 <= ctx.nbest:
        return
    low = cover & (~cover + 1)
    buf = <int*>malloc(ncompat * sizeof(int))
    for t in range(ncompat):
        i = compat[t]
        if ctx.masks[i] & low:
            mi = ctx.masks[i]
            k = 0
            for j in range(ncompat):
                if not (ctx.masks[compat[j]] & mi):
                    buf[k] = compat[j]
                    k += 1
            ctx.chosen[depth] = i
            _pack(ctx, buf, k, depth + 1)
    k = 0
    for j in range(ncompat):
        if not (ctx.masks[compat[j]] & low):
            buf[k] = compat[j]
            k += 1
    _pack(ctx, buf, k, depth)
    free(buf)


def max_packing(masks_list):
    cdef int m = len(masks_list)
    cdef PackCtx ctx
    cdef int* compat
    cdef int t
    if m == 0:
        return []
    ctx.masks = <u64*>malloc(m * sizeof(u64))
    ctx.chosen = <int*>malloc(m * sizeof(int))
    ctx.best = <int*>malloc(m * sizeof(int))
    compat = <int*>malloc(m * sizeof(int))
    ctx.nbest = 0
    try:
        for t in range(m):
            ctx.masks[t] = <u64>masks_list[t]
            compat[t] = t
        with nogil:
            _pack(&ctx, compat, m, 0)
        return sorted([ctx.best[t] for t in range(ctx.nbest)])
    finally:
        free(ctx.masks)
        free(ctx.chosen)
        free(ctx.best)
        free(compat)
