"""Exact clique number and chromatic number."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InvariantViolation, ResourceBudgetError
from .graphs import Graph

#: Largest graph the exact solvers accept.
SOLVER_BUDGET = 64


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    clique: tuple[int, ...]


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    coloring: tuple[int, ...]  # color of vertex v at index v - 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.chi)]
        for v, c in enumerate(self.coloring, 1):
            out[c].append(v)
        return out


def _check_budget(g: Graph, budget: int) -> None:
    if g.n > budget:
        raise ResourceBudgetError(f"{g.n} vertices exceed the exact-solver budget {budget}")


def clique_number(g: Graph, budget: int = SOLVER_BUDGET) -> CliqueResult:
    _check_budget(g, budget)
    clique = tuple(v + 1 for v in kernels.max_clique(g.masks))
    if not g.is_clique(clique):
        raise InvariantViolation(f"solver returned a non-clique {clique}")
    return CliqueResult(len(clique), clique)


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy saturation-order coloring; colors indexed by vertex - 1."""
    n = g.n
    adj = g.masks
    color = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (len(seen[u]), sum(1 for w in range(n) if adj[u] >> w & 1 and color[w] < 0), -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        m = adj[v]
        while m:
            low = m & -m
            seen[low.bit_length() - 1].add(c)
            m ^= low
    return color


def chromatic_number(g: Graph, budget: int = SOLVER_BUDGET) -> ColoringResult:
    """Exact chromatic number.

    The clique number is a lower bound and DSATUR an upper bound; the values
    in between are settled by exact k-colorability search.
    """
    _check_budget(g, budget)
    if g.n == 0:
        return ColoringResult(0, ())
    best = dsatur_coloring(g)
    upper = max(best) + 1
    lower = clique_number(g, budget).omega
    for k in range(lower, upper):
        found = kernels.k_coloring(g.masks, k)
        if found is not None:
            best = found
            break
    chi = max(best) + 1
    if not g.is_proper_coloring(best):
        raise InvariantViolation("solver returned an improper coloring")
    return ColoringResult(chi, tuple(best))
