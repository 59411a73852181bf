"""Pure-Python hot kernels.

Same signatures and results as the compiled ``_speedups`` module. Graph
kernels take adjacency as a list of int bitmasks over 0-based vertices.
"""
from __future__ import annotations

import math


def sieve_segment(lo: int, size: int, base_primes) -> bytearray:
    """Flags for lo..lo+size-1: 1 where no base prime is a proper divisor."""
    flags = bytearray([1]) * size
    hi = lo + size
    for i in range(min(size, max(0, 2 - lo))):
        flags[i] = 0
    for p in base_primes:
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        if start < hi:
            flags[start - lo::p] = bytes(len(range(start - lo, size, p)))
    return flags


def grid_adjacency(w: int, h: int) -> bytearray:
    """Row-major n*n 0/1 matrix of the gcd visibility rule on {0..w}x{0..h}.

    Point (a, b) has index a*(h+1) + b.
    """
    cols = h + 1
    n = (w + 1) * cols
    mat = bytearray(n * n)
    gcd = math.gcd
    for u in range(n):
        a, b = divmod(u, cols)
        for v in range(u + 1, n):
            c, d = divmod(v, cols)
            if gcd(c - a, d - b) == 1:
                mat[u * n + v] = mat[v * n + u] = 1
    return mat


def max_clique(adj: list[int]) -> list[int]:
    """Maximum clique by branch and bound with a greedy-coloring bound."""
    n = len(adj)
    best = [0, 0]  # size, mask

    def expand(r_mask: int, r_size: int, cand: int) -> None:
        order = []
        bound = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                uncolored &= ~low
                order.append(v)
                bound.append(color)
        for idx in range(len(order) - 1, -1, -1):
            if r_size + bound[idx] <= best[0]:
                return
            v = order[idx]
            bit = 1 << v
            nr = r_mask | bit
            nc = cand & adj[v]
            if nc:
                expand(nr, r_size + 1, nc)
            elif r_size + 1 > best[0]:
                best[0] = r_size + 1
                best[1] = nr
            cand &= ~bit

    if n:
        expand(0, 0, (1 << n) - 1)
    mask = best[1]
    return [v for v in range(n) if mask >> v & 1]


def k_coloring(adj: list[int], k: int) -> list[int] | None:
    """A proper coloring with colors 0..k-1, or None if none exists.

    Backtracking in saturation order (most distinct neighbor colors first,
    then most uncolored neighbors, then lowest index); a vertex may open at
    most one new color, which removes color-permutation symmetry.
    """
    n = len(adj)
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    sat = [0] * n
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    state = {"uncolored": (1 << n) - 1}

    def pick() -> int:
        unc = state["uncolored"]
        best_v = -1
        best_key = (-1, -1)
        q = unc
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q ^= low
            key = (sat[v], (adj[v] & unc).bit_count())
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def solve(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = pick()
        row = cnt[v]
        top = min(used, k - 1)
        for c in range(top + 1):
            if row[c]:
                continue
            color[v] = c
            state["uncolored"] &= ~(1 << v)
            for u in nbrs[v]:
                cu = cnt[u]
                if cu[c] == 0:
                    sat[u] += 1
                cu[c] += 1
            if solve(depth + 1, used + 1 if c == used else used):
                return True
            for u in nbrs[v]:
                cu = cnt[u]
                cu[c] -= 1
                if cu[c] == 0:
                    sat[u] -= 1
            state["uncolored"] |= 1 << v
            color[v] = -1
        return False

    return color if solve(0, 0) else None
