"""Simple graphs of order at most 64 stored as adjacency bitrows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class CapacityError(ValueError):
    """Raised when an operation would produce a graph with more than 64 vertices."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """An order-``n`` simple graph; ``adj[u]`` is the neighbor mask of ``u``.

    Instances are immutable and validated on construction: rows must be
    symmetric, loop-free and carry no bits at positions ``>= n``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if not 0 <= n <= MAX_ORDER:
            raise CapacityError(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise ValueError(f"expected {n} rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                if not adj[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, s: int, t: int) -> Graph:
        return join(cls.empty(s), cls.empty(t))

    # -- basic queries ------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of edges, e(G)."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_complete(self) -> bool:
        return self.size == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n == 0 or reach(self.adj, 0, self.vertex_mask) == self.vertex_mask

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError(f"{u}-{v} is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, [*self.edges(), *edges])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            rows[perm[u]] = mask_of(perm[v] for v in bits(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Mask of vertices reachable from ``start`` inside the vertex mask ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H; the vertices of ``g`` keep indices ``0..|G|-1``."""
    if g.n + h.n > MAX_ORDER:
        raise CapacityError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between the two parts."""
    if g.n + h.n > MAX_ORDER:
        raise CapacityError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    left = g.vertex_mask
    right = h.vertex_mask << g.n
    return Graph(
        g.n + h.n,
        tuple(row | right for row in g.adj) + tuple((row << g.n) | left for row in h.adj),
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[S] with the vertices of S renumbered in ascending order."""
    keep = sorted(set(vertices))
    if keep and (keep[0] < 0 or keep[-1] >= g.n):
        raise ValueError("vertex set is not a subset of V(G)")
    index = {v: i for i, v in enumerate(keep)}
    s = mask_of(keep)
    return Graph(len(keep), tuple(mask_of(index[w] for w in bits(g.adj[v] & s)) for v in keep))


class DegreeSequence(tuple):
    """Non-decreasing degree list ``d_1 <= ... <= d_n``.

    Stored 0-based like any tuple; :meth:`d` gives the 1-based access used in
    degree-sequence theorems.
    """

    def __new__(cls, degrees: Iterable[int]) -> DegreeSequence:
        seq = super().__new__(cls, sorted(degrees))
        n = len(seq)
        if seq and (seq[0] < 0 or seq[-1] > n - 1):
            raise ValueError(f"degrees must lie in 0..{n - 1}")
        if sum(seq) % 2:
            raise ValueError("degree sum must be even")
        return seq

    @property
    def n(self) -> int:
        return len(self)

    def d(self, i: int) -> int:
        """The ``i``-th smallest degree, ``1 <= i <= n``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"degree index {i} outside 1..{len(self)}")
        return self[i - 1]


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees())


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdős–Rényi G(n, p) drawn with ``rng`` (a :class:`random.Random`)."""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
