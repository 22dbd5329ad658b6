"""Canonical labeling by partition refinement plus exhaustive individualization.

The canonical form of a graph is the relabeling whose packed upper triangle
(graph6 bit order) is lexicographically smallest among all leaves of the
individualization-refinement tree.  Automorphisms discovered at equivalent
leaves prune sibling branches that lie in a common orbit of the pointwise
stabilizer of the current prefix; the discovered automorphisms generate the
full automorphism group, so their orbits are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, mask_of
from .graph6 import encode_graph6


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism certificate: two graphs are isomorphic iff certificates match."""

    certificate: bytes

    def __str__(self) -> str:
        return self.certificate.decode("ascii")


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # order[i] is the vertex placed at canonical position i
    generators: tuple[tuple[int, ...], ...]  # automorphisms as vertex maps


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Fragments of a split cell stay in the cell's position, ordered by
    decreasing neighbor count into the splitter, so the result depends only
    on the isomorphism type of (graph, partition).
    """
    n = len(adj)
    queue = [mask_of(c) for c in cells]
    qi = 0
    while qi < len(queue) and len(cells) < n:
        w = queue[qi]
        qi += 1
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[x] & w).bit_count() for x in cell]
            lo = min(counts)
            if lo == max(counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for x, c in zip(cell, counts):
                groups.setdefault(c, []).append(x)
            for c in sorted(groups, reverse=True):
                frag = groups[c]
                out.append(frag)
                queue.append(mask_of(frag))
        cells = out
    return cells


def _packed(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper triangle of the relabeled graph as an integer, graph6 bit order."""
    value = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def _orbit_closure(seed: int, gens: list[tuple[int, ...]]) -> int:
    closure = seed
    frontier = seed
    while frontier:
        new = 0
        for g in gens:
            for v in bits(frontier):
                new |= 1 << g[v]
        new &= ~closure
        closure |= new
        frontier = new
    return closure


def canonical_labeling(adj: Sequence[int], cells: list[list[int]] | None = None) -> Labeling:
    """Search the individualization-refinement tree of ``adj``.

    ``cells`` is an optional ordered initial partition (default: unit
    partition); the labeling is canonical relative to it.
    """
    n = len(adj)
    if n == 0:
        return Labeling((), ())
    root = refine(adj, [list(range(n))] if cells is None else [list(c) for c in cells])

    best: list = [None, None]  # packed value, order
    autos: list[tuple[int, ...]] = []

    def visit(part: list[list[int]], prefix: list[int]) -> None:
        if len(part) == n:
            order = [c[0] for c in part]
            value = _packed(adj, order)
            if best[0] is None or value < best[0]:
                best[0], best[1] = value, order
            elif value == best[0]:
                perm = [0] * n
                for a, b in zip(best[1], order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        ti = next(i for i, c in enumerate(part) if len(c) > 1)
        target = part[ti]
        tried = 0
        for u in target:
            if tried:
                fixing = [g for g in autos if all(g[v] == v for v in prefix)]
                if fixing and _orbit_closure(tried, fixing) >> u & 1:
                    continue
            tried |= 1 << u
            child = part[:ti] + [[u], [x for x in target if x != u]] + part[ti + 1 :]
            visit(refine(adj, child), prefix + [u])

    visit(root, [])
    return Labeling(tuple(best[1]), tuple(autos))


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) for each vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_relabeling(g: Graph) -> Graph:
    lab = canonical_labeling(g.adj)
    pos = [0] * g.n
    for i, v in enumerate(lab.order):
        pos[v] = i
    return g.relabel(pos)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(encode_graph6(canonical_relabeling(g)))


def automorphism_orbits(g: Graph) -> list[int]:
    return orbits(g.n, canonical_labeling(g.adj).generators)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_form(g) == canonical_form(h)
