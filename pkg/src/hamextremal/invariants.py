"""Exact vertex connectivity, independence number and independent degree sums."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import DegreeSequence, Graph, bits


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_cut: tuple[int, ...] | None  # None for complete graphs


@dataclass(frozen=True)
class IndependenceResult:
    alpha: int
    witness_set: tuple[int, ...]


def _local_connectivity(adj: Sequence[int], s: int, t: int, limit: int) -> tuple[int, tuple[int, ...] | None]:
    """Max number of internally disjoint s-t paths, capped at ``limit``.

    Augmenting paths on the vertex-split digraph: vertex ``v`` becomes ``2v``
    (in) and ``2v + 1`` (out) joined by a unit arc; arcs between vertices are
    uncapacitated.  When the cap is not reached, the saturated internal arcs
    leaving the residual-reachable set form a minimum separating vertex set.
    """
    n = len(adj)
    through = [False] * n  # internal arc v_in -> v_out carries flow
    pred_in: dict[int, int] = {}  # v -> u when one unit runs u_out -> v_in
    value = 0
    for x in bits(adj[s] & adj[t]):
        if value == limit:
            return value, None
        through[x] = True
        pred_in[x] = s
        value += 1

    src, dst = 2 * s + 1, 2 * t
    while value < limit:
        parent = {src: -1}
        queue = deque([src])
        while queue and dst not in parent:
            node = queue.popleft()
            v = node >> 1
            if node & 1:
                for w in bits(adj[v]):
                    if 2 * w not in parent:
                        parent[2 * w] = node
                        queue.append(2 * w)
                if v != s and through[v] and 2 * v not in parent:
                    parent[2 * v] = node
                    queue.append(2 * v)
            else:
                if v != t and not through[v] and node + 1 not in parent:
                    parent[node + 1] = node
                    queue.append(node + 1)
                u = pred_in.get(v)
                if u is not None and 2 * u + 1 not in parent:
                    parent[2 * u + 1] = node
                    queue.append(2 * u + 1)
        if dst not in parent:
            return value, tuple(v for v in range(n) if 2 * v in parent and 2 * v + 1 not in parent)
        node = dst
        while node != src:
            prev = parent[node]
            a, b = prev >> 1, node >> 1
            if a == b:
                through[a] = not prev & 1
            elif prev & 1:
                if b != t:
                    pred_in[b] = a
            else:
                del pred_in[a]
            node = prev
        value += 1
    return value, None


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint paths between nonadjacent s and t."""
    if s == t or g.has_edge(s, t):
        raise ValueError("s and t must be distinct and nonadjacent")
    return _local_connectivity(g.adj, s, t, g.n)[0]


def connectivity(g: Graph) -> ConnectivityResult:
    """Exact κ(G) with a minimum separating set.

    The minimum of the local connectivities over nonadjacent pairs is taken
    with sources restricted to the first κ+1 vertices (some vertex among them
    avoids a minimum cut and is separated from a later vertex), and each flow
    stops once it reaches the best value found so far.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity of the null graph is undefined")
    if g.is_complete():
        return ConnectivityResult(n - 1, None)
    adj = g.adj
    if not g.is_connected():
        return ConnectivityResult(0, ())
    degs = g.degrees()
    v0 = min(range(n), key=degs.__getitem__)
    best, cut = degs[v0], tuple(bits(adj[v0]))
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not adj[i] >> j & 1:
                val, c = _local_connectivity(adj, i, j, best)
                if val < best:
                    best, cut = val, c
        i += 1
    return ConnectivityResult(best, cut)


def _max_independent(adj: Sequence[int], cand: int) -> int:
    best = [0]

    def expand(chosen: int, cand: int, size: int) -> None:
        if not cand:
            if size > best[0].bit_count():
                best[0] = chosen
            return
        if size + cand.bit_count() <= best[0].bit_count():
            return
        # some vertex of N[v] lies in a maximum independent set of cand
        v = min(bits(cand), key=lambda x: (adj[x] & cand).bit_count())
        for w in bits((adj[v] & cand) | (1 << v)):
            expand(chosen | 1 << w, cand & ~adj[w] & ~(1 << w), size + 1)

    expand(0, cand, 0)
    return best[0]


def independence_number(g: Graph) -> IndependenceResult:
    s = _max_independent(g.adj, g.vertex_mask)
    return IndependenceResult(s.bit_count(), tuple(bits(s)))


def min_degree_sum_independent(g: Graph, s: int) -> tuple[int, tuple[int, ...]]:
    """Minimum degree sum over independent sets of exactly ``s`` vertices, with a minimizer."""
    if s < 1:
        raise ValueError("s must be positive")
    adj = g.adj
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    best = [None, ()]

    def lower_bound(cand: int, r: int) -> int | None:
        picked = sorted(deg[v] for v in bits(cand))[:r]
        return sum(picked) if len(picked) == r else None

    def expand(chosen: list[int], total: int, cand: int) -> None:
        r = s - len(chosen)
        if r == 0:
            if best[0] is None or total < best[0]:
                best[0], best[1] = total, tuple(sorted(chosen))
            return
        lb = lower_bound(cand, r)
        if lb is None or (best[0] is not None and total + lb >= best[0]):
            return
        for v in sorted(bits(cand), key=rank.__getitem__):
            later = cand & ~adj[v]
            later = sum(1 << w for w in bits(later) if rank[w] > rank[v])
            chosen.append(v)
            expand(chosen, total + deg[v], later)
            chosen.pop()

    expand([], 0, g.vertex_mask)
    if best[0] is None:
        raise ValueError(f"sigma_{s} undefined: G has no independent set of size {s}")
    return best[0], best[1]


def sigma_s(g: Graph, s: int) -> int:
    """σ_s(G): minimum degree sum of an independent set of size ``s``."""
    return min_degree_sum_independent(g, s)[0]


def bondy_connectivity_condition(d: DegreeSequence | Sequence[int], k: int) -> bool:
    """Degree condition guaranteeing (k+1)-connectivity.

    True iff ``d_j >= j + k`` for every ``1 <= j <= n - 1 - d_{n-k}``.
    """
    d = d if isinstance(d, DegreeSequence) else DegreeSequence(d)
    n = d.n
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} outside 0..{n - 2}")
    return all(d.d(j) >= j + k for j in range(1, n - d.d(n - k)))
