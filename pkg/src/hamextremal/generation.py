"""Isomorph-free generation of graphs by canonical vertex augmentation.

A graph ``G`` of order ``m + 1`` is produced from a parent ``P`` of order ``m``
by adding vertex ``m`` with neighborhood ``S``.  The extension is kept iff the
new vertex lies in the automorphism orbit of the vertex that the canonical
labeling places last; that vertex always has minimum degree, which gives
cheap rejections before any labeling search.  Neighborhoods are restricted to
one representative per ``Aut(P)``-orbit, so accepted children of one parent
are pairwise non-isomorphic and every class appears exactly once.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterator

from .canon import canonical_labeling, orbits, refine
from .graph import Graph, bits, mask_of

log = logging.getLogger(__name__)

UNFILTERED_LIMIT = 9  # unfiltered order 10 is ~12M classes; needs force
FILTERED_LIMIT = 10
HARD_LIMIT = 12


class ScaleError(RuntimeError):
    """The requested exhaustive run exceeds the configured practicality bound."""


@dataclass(frozen=True)
class GenFilter:
    """Conjunctive filter on generated graphs; ``None``/``False`` disables a clause."""

    min_size: int | None = None
    max_size: int | None = None
    connectivity_exact: int | None = None
    nonhamiltonian_only: bool = False
    nontraceable_only: bool = False
    bipartite_balanced: int | None = None  # required part size

    @property
    def is_empty(self) -> bool:
        return self == GenFilter()

    def accepts(self, g: Graph) -> bool:
        from .hamiltonicity import is_hamiltonian, is_traceable
        from .invariants import connectivity

        e = g.size
        if self.min_size is not None and e < self.min_size:
            return False
        if self.max_size is not None and e > self.max_size:
            return False
        if self.bipartite_balanced is not None and not has_balanced_bipartition(g, self.bipartite_balanced):
            return False
        if self.connectivity_exact is not None and g.min_degree < self.connectivity_exact:
            return False
        if self.nonhamiltonian_only and g.n >= 3 and is_hamiltonian(g).decision:
            return False
        if self.nontraceable_only and is_traceable(g).decision:
            return False
        if self.connectivity_exact is not None and connectivity(g).kappa != self.connectivity_exact:
            return False
        return True


def has_balanced_bipartition(g: Graph, part: int) -> bool:
    """True iff ``g`` is bipartite with a 2-coloring whose color classes have ``part`` vertices each."""
    if g.n != 2 * part:
        return False
    color = [-1] * g.n
    reachable = {0}  # achievable sizes of color class 0
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        count = [1, 0]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    count[color[v]] += 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
        reachable = {r + count[0] for r in reachable} | {r + count[1] for r in reachable}
    return part in reachable


def _min_orbit_rep(s: int, gens) -> int:
    """Smallest member of the orbit of vertex set ``s`` under the generators."""
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for g in gens:
            y = 0
            for v in bits(x):
                y |= 1 << g[v]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return min(seen)


class _Augmenter:
    def __init__(self, n: int, min_size: int | None, max_size: int | None):
        self.n = n
        total = comb(n, 2)
        # edges a graph of order m needs so that completing it can still reach min_size
        self.floor = [
            -1 if min_size is None else min_size - (total - comb(m, 2)) for m in range(n + 1)
        ]
        self.ceiling = max_size if max_size is not None else total

    def children(self, adj: tuple[int, ...], gens) -> Iterator[tuple[tuple[int, ...], tuple | None]]:
        """Accepted one-vertex extensions of ``adj``; yields (child adjacency, child generators or None)."""
        m = len(adj)
        deg = [row.bit_count() for row in adj]
        e = sum(deg) // 2
        nontrivial = [g for g in gens if any(g[v] != v for v in range(m))]
        dmax = min(deg) + 1 if m else 0
        newbit = 1 << m
        for d in range(dmax + 1):
            if e + d < self.floor[m + 1] or e + d > self.ceiling:
                continue
            required = mask_of(u for u in range(m) if deg[u] == d - 1)
            free = [u for u in range(m) if deg[u] >= d]
            k = d - required.bit_count()
            if k < 0 or k > len(free):
                continue
            for chosen in combinations(free, k):
                s = required | mask_of(chosen)
                if nontrivial and _min_orbit_rep(s, nontrivial) != s:
                    continue
                child = tuple(row | newbit if s >> u & 1 else row for u, row in enumerate(adj)) + (s,)
                verdict = self._accept(child, m, d)
                if verdict is not False:
                    yield child, (None if verdict is True else verdict)

    @staticmethod
    def _accept(adj: tuple[int, ...], v: int, d: int):
        """False to reject; True to accept; a generator tuple when a labeling search was needed."""
        mins = [u for u in range(v) if adj[u].bit_count() == d]
        if not mins:
            return True
        cells = refine(adj, [list(range(v + 1))])
        last = cells[-1]
        if v not in last:
            return False
        if len(last) == 1:
            return True
        lab = canonical_labeling(adj, cells)
        orb = orbits(v + 1, lab.generators)
        return lab.generators if orb[v] == orb[lab.order[-1]] else False

    def expand(self, adj: tuple[int, ...], gens) -> Iterator[tuple[int, ...]]:
        """All accepted descendants of ``adj`` at the target order (depth first)."""
        m = len(adj)
        if m == self.n:
            yield adj
            return
        if gens is None:
            gens = canonical_labeling(adj).generators if m else ()
        for child, child_gens in self.children(adj, gens):
            if m + 1 == self.n:
                yield child
            else:
                yield from self.expand(child, child_gens)

    def frontier(self, order: int) -> list[tuple[int, ...]]:
        saved, self.n = self.n, order
        try:
            return list(self.expand((), ()))
        finally:
            self.n = saved


def _check_scale(n: int, flt: GenFilter, force: bool) -> None:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > HARD_LIMIT:
        raise ScaleError(f"enumeration beyond order {HARD_LIMIT} is not supported")
    limit = UNFILTERED_LIMIT if flt.min_size is None else FILTERED_LIMIT
    if n > limit and not force:
        raise ScaleError(f"order {n} is too large for exhaustive generation without force")


def _run_seeds(args) -> list[tuple[int, ...]]:
    n, flt, seeds = args
    aug = _Augmenter(n, flt.min_size, flt.max_size)
    return [adj for s in seeds for adj in aug.expand(s, None) if _passes(flt, n, adj)]


def _passes(flt: GenFilter, n: int, adj: tuple[int, ...]) -> bool:
    return flt.is_empty or flt.accepts(Graph(n, adj))


def _stream(n: int, flt: GenFilter, workers: int, seed_order: int) -> Iterator[tuple[int, ...]]:
    aug = _Augmenter(n, flt.min_size, flt.max_size)
    if workers <= 1 or n <= seed_order:
        for adj in aug.expand((), ()):
            if _passes(flt, n, adj):
                yield adj
        return
    seeds = aug.frontier(seed_order)
    chunks = [seeds[i : i + 16] for i in range(0, len(seeds), 16)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_run_seeds, [(n, flt, c) for c in chunks]):
            yield from batch


def generate_all(
    n: int,
    flt: GenFilter | None = None,
    visitor: Callable[[Graph], None] | None = None,
    *,
    workers: int = 1,
    force: bool = False,
    seed_order: int = 6,
) -> Iterator[Graph]:
    """Yield one graph from every isomorphism class of order ``n`` passing ``flt``.

    With ``workers > 1`` the canonical graphs of order ``seed_order`` are
    split into batches explored by independent processes; batches are merged
    in frontier order, so the emission order is the same for every worker
    count.  ``visitor`` is called on each emitted graph.
    """
    flt = flt or GenFilter()
    _check_scale(n, flt, force)
    for adj in _stream(n, flt, workers, seed_order):
        g = Graph(n, adj)
        if visitor is not None:
            visitor(g)
        yield g


def count_graphs(n: int, *, workers: int = 1, force: bool = False) -> int:
    _check_scale(n, GenFilter(), force)
    return sum(1 for _ in _stream(n, GenFilter(), workers, 6))
