"""Visibility graphs of point sets and of integer grid windows."""
from __future__ import annotations

from itertools import combinations

from . import kernels
from .errors import ResourceBudgetError
from .geometry import ExactPoint, strictly_between
from .graphs import Graph

#: Largest grid window (in points) the grid constructor will build.
GRID_BUDGET = 4096


def visibility_graph(points: list[ExactPoint]) -> Graph:
    """Edge i~j iff no third point lies on the open segment (O(n^3) reference)."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    edges = []
    for i, j in combinations(range(len(pts)), 2):
        a, b = pts[i], pts[j]
        if not any(strictly_between(a, b, c) for k, c in enumerate(pts) if k != i and k != j):
            edges.append((i + 1, j + 1))
    return Graph(len(pts), edges)


def grid_points(w: int, h: int) -> list[ExactPoint]:
    """Points of {0..w} x {0..h} in the vertex order used by the grid graph."""
    return [ExactPoint(a, 0, b) for a in range(w + 1) for b in range(h + 1)]


def grid_vertex(h: int, a: int, b: int) -> int:
    """Vertex label of lattice point (a, b) in a window of height h."""
    return a * (h + 1) + b + 1


def grid_visibility_graph(w: int, h: int, budget: int = GRID_BUDGET) -> Graph:
    """Visibility graph of {0..w} x {0..h}: (a,b)~(c,d) iff gcd(|a-c|, |b-d|) = 1."""
    if w < 1 or h < 1:
        raise ValueError("window dimensions must be at least 1")
    n = (w + 1) * (h + 1)
    if n > budget:
        raise ResourceBudgetError(f"{n} grid points exceed the budget {budget}")
    return Graph.from_matrix(n, kernels.grid_adjacency(w, h))


def parity_four_coloring(w: int, h: int) -> list[int]:
    """Color (a, b) by (a mod 2, b mod 2); indexed by vertex - 1."""
    return [2 * (a % 2) + b % 2 for a in range(w + 1) for b in range(h + 1)]


def find_induced_cycle(g: Graph, length: int = 5) -> list[int] | None:
    """First induced cycle of the given length (vertex list), or None.

    Grows induced paths from their smallest vertex, so each cycle is found
    from its minimum.
    """
    if length < 4:
        raise ValueError("induced cycles of length < 4 are just triangles")
    adj = g.masks

    def extend(path: list[int], forbidden: int) -> list[int] | None:
        start, last = path[0], path[-1]
        if len(path) == length:
            return path if adj[last] >> start & 1 else None
        cand = adj[last] & ~forbidden
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if v < start:
                continue
            # v may touch only the last path vertex, plus the start if v closes the cycle
            inner = 0
            for u in path[1:-1]:
                inner |= 1 << u
            if adj[v] & inner:
                continue
            if len(path) > 1 and adj[v] >> start & 1 and len(path) + 1 < length:
                continue
            found = extend(path + [v], forbidden | low)
            if found:
                return found
        return None

    for s in range(g.n):
        found = extend([s], 1 << s)
        if found:
            return [v + 1 for v in found]
    return None


def is_induced_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if len(set(cycle)) != k:
        return False
    for x in range(k):
        for y in range(x + 1, k):
            consecutive = y == x + 1 or (x == 0 and y == k - 1)
            if g.has_edge(cycle[x], cycle[y]) != consecutive:
                return False
    return True
