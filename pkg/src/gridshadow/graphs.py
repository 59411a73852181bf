"""Simple undirected graphs on vertices 1..n, plus standard generators."""
from __future__ import annotations

import random
from collections.abc import Iterable


class Graph:
    """Undirected simple graph with vertex set {1, ..., n}.

    Adjacency is held as one int bitmask per vertex over 0-based positions,
    which is also the layout the solver kernels consume.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self._adj = adj

    @classmethod
    def from_masks(cls, masks: list[int]) -> Graph:
        g = cls(len(masks))
        for v, m in enumerate(masks):
            if m >> v & 1 or m >> len(masks):
                raise ValueError("mask has a self-loop or out-of-range bit")
        g._adj = list(masks)
        for u in range(g.n):
            for v in g._bits(masks[u]):
                if not masks[v] >> u & 1:
                    raise ValueError("adjacency masks are not symmetric")
        return g

    @classmethod
    def from_matrix(cls, n: int, flat: bytes | bytearray) -> Graph:
        masks = []
        for u in range(n):
            row = flat[u * n:(u + 1) * n]
            masks.append(sum(1 << v for v, f in enumerate(row) if f))
        return cls.from_masks(masks)

    @staticmethod
    def _bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    @property
    def masks(self) -> list[int]:
        """0-based adjacency bitmasks (a copy)."""
        return list(self._adj)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u + 1 for u in self._bits(self._adj[v - 1])]

    def degree(self, v: int) -> int:
        return self._adj[v - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u + 1, v + 1) for u in range(self.n) for v in self._bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled 1..k in the given order."""
        vs = list(vertices)
        pos = {v: i + 1 for i, v in enumerate(vs)}
        return Graph(len(vs), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos])

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def is_proper_coloring(self, coloring: dict[int, int] | list[int]) -> bool:
        """``coloring`` maps vertex -> color (a list is indexed from vertex 1)."""
        col = coloring if isinstance(coloring, dict) else {v: c for v, c in enumerate(coloring, 1)}
        if set(col) != set(self.vertices()):
            return False
        return all(col[u] != col[v] for u, v in self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complete_graph(k: int) -> Graph:
    return Graph(k, [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(v, v + 1) for v in range(1, k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(k, [(v, v + 1) for v in range(1, k)] + [(1, k)])


def empty_graph(k: int) -> Graph:
    return Graph(k)


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


def mycielski(g: Graph) -> Graph:
    """Mycielskian of g.

    Vertex v keeps its label, its shadow u_v is n + v and the hub is 2n + 1.
    """
    n = g.n
    edges = list(g.edges())
    for a, b in g.edges():
        edges.append((n + a, b))
        edges.append((n + b, a))
    edges.extend((n + v, 2 * n + 1) for v in g.vertices())
    return Graph(2 * n + 1, edges)


def mycielski_chain(t: int, seed: Graph | None = None) -> Graph:
    """Apply the Mycielski construction t times, starting from K2 by default."""
    g = complete_graph(2) if seed is None else seed
    for _ in range(t):
        g = mycielski(g)
    return g


def grotzsch_graph() -> Graph:
    return mycielski(cycle_graph(5))
