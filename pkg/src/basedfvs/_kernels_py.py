"""Pure-Python bitmask kernels for the exact oracles.

Vertices are ``0 .. n-1``; ``adj[v]`` is the neighbour bitmask of ``v``.
:mod:`basedfvs._kernels` is a compiled drop-in with the same functions and
the same results.
"""

from __future__ import annotations


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def simple_cycles(adj: list[int], cap: int) -> list[tuple[int, ...]] | None:
    """Every simple cycle once, or None if there are more than ``cap``.

    A cycle is reported from its smallest vertex ``s``, in the direction in
    which the second vertex is smaller than the last.
    """
    n = len(adj)
    out: list[tuple[int, ...]] = []
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]
        cand = [adj[s] & allowed]
        on = 1 << s
        while cand:
            c = cand[-1]
            if not c:
                cand.pop()
                on &= ~(1 << path.pop())
                continue
            low = c & -c
            cand[-1] = c ^ low
            w = low.bit_length() - 1
            path.append(w)
            on |= low
            if len(path) >= 3 and (adj[w] >> s) & 1 and path[1] < w:
                out.append(tuple(path))
                if len(out) > cap:
                    return None
            cand.append(adj[w] & allowed & ~on)
    return out


def peel(adj: list[int], alive: int) -> int:
    """Strip vertices of degree at most 1 until none is left."""
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def is_forest(adj: list[int], alive: int) -> bool:
    return peel(adj, alive) == 0


def _cycle_set(adj: list[int], alive: int) -> int:
    """Vertex set of a short closed walk; every feedback vertex set meets it."""
    best = 0
    best_size = 1 << 30
    for r in _bits(alive):
        parent = {r: -1}
        queue = [r]
        found = 0
        head = 0
        while head < len(queue) and not found:
            v = queue[head]
            head += 1
            for w in _bits(adj[v] & alive):
                if w == parent[v]:
                    continue
                if w in parent:
                    m = 0
                    x = v
                    while x != -1:
                        m |= 1 << x
                        x = parent[x]
                    x = w
                    while x != -1:
                        m |= 1 << x
                        x = parent[x]
                    found = m
                    break
                parent[w] = v
                queue.append(w)
        size = found.bit_count()
        if found and size < best_size:
            best, best_size = found, size
    return best


def _fvs_search(adj: list[int], alive: int, k: int) -> int | None:
    alive = peel(adj, alive)
    if not alive:
        return 0
    if k == 0:
        return None
    for v in _bits(_cycle_set(adj, alive)):
        r = _fvs_search(adj, alive & ~(1 << v), k - 1)
        if r is not None:
            return r | (1 << v)
    return None


def min_fvs(adj: list[int]) -> int:
    """Bitmask of a minimum feedback vertex set (iterative deepening)."""
    full = (1 << len(adj)) - 1
    for k in range(len(adj) + 1):
        r = _fvs_search(adj, full, k)
        if r is not None:
            return r
    raise AssertionError("unreachable: deleting every vertex leaves a forest")


def max_packing(masks: list[int]) -> list[int]:
    """Indices of a maximum family of pairwise disjoint masks (each of size >= 3)."""
    best: list[int] = []
    chosen: list[int] = []

    def rec(compat: list[int]) -> None:
        nonlocal best
        if not compat:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        union = 0
        for j in compat:
            union |= masks[j]
        if len(chosen) + union.bit_count() // 3 <= len(best):
            return
        low = union & -union
        for i in compat:
            if masks[i] & low:
                mi = masks[i]
                chosen.append(i)
                rec([j for j in compat if not masks[j] & mi])
                chosen.pop()
        rec([j for j in compat if not masks[j] & low])

    rec(list(range(len(masks))))
    return sorted(best)
