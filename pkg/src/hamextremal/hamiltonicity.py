"""Exact Hamilton cycle / path decision and classical sufficient conditions.

The condition checkers never consult the exact solvers, so tests can use the
solvers to audit them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import DegreeSequence, Graph, bits, join, reach
from .invariants import connectivity, independence_number, sigma_s


class ConditionNotApplicable(ValueError):
    """The hypotheses a sufficient condition needs do not hold for this graph."""


@dataclass(frozen=True)
class HamiltonicityResult:
    decision: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.decision


def _cycle_search(adj: Sequence[int], n: int) -> tuple[int, ...] | None:
    full = (1 << n) - 1
    deg = [row.bit_count() for row in adj]
    anchor = min(range(n), key=lambda v: (deg[v], v))
    anchor_bit = 1 << anchor
    dead: set[int] = set()
    path = [anchor]

    def extend(cur: int, visited: int) -> bool:
        rest = full & ~visited
        if not rest:
            return bool(adj[cur] & anchor_bit)
        key = visited << 6 | cur
        if key in dead:
            return False
        if not adj[cur] & rest or not adj[anchor] & rest:
            dead.add(key)
            return False
        ends = rest | (1 << cur) | anchor_bit
        for u in bits(rest):
            if (adj[u] & ends).bit_count() < 2:
                dead.add(key)
                return False
        low = rest & -rest
        if reach(adj, low.bit_length() - 1, rest) != rest:
            dead.add(key)
            return False
        for w in sorted(bits(adj[cur] & rest), key=lambda x: (adj[x] & rest).bit_count()):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        dead.add(key)
        return False

    return tuple(path) if extend(anchor, anchor_bit) else None


def is_hamiltonian(g: Graph) -> HamiltonicityResult:
    """Exact Hamilton-cycle decision; the witness lists the cycle's vertices in order."""
    if g.n < 3:
        raise ValueError("Hamilton cycles are undefined below order 3")
    if g.min_degree < 2 or not g.is_connected():
        return HamiltonicityResult(False)
    cyc = _cycle_search(g.adj, g.n)
    return HamiltonicityResult(cyc is not None, cyc)


def is_traceable(g: Graph) -> HamiltonicityResult:
    """Hamilton-path decision through the cone: G is traceable iff G ∨ K1 is hamiltonian."""
    if g.n == 0:
        raise ValueError("traceability of the null graph is undefined")
    if g.n == 1:
        return HamiltonicityResult(True, (0,))
    res = is_hamiltonian(join(g, Graph.complete(1)))
    if not res.decision:
        return HamiltonicityResult(False)
    cyc = res.witness
    i = cyc.index(g.n)
    return HamiltonicityResult(True, cyc[i + 1 :] + cyc[:i])


def hamiltonian_path_direct(g: Graph) -> HamiltonicityResult:
    """Hamilton-path decision by direct backtracking from every start vertex."""
    n = g.n
    if n == 0:
        raise ValueError("traceability of the null graph is undefined")
    adj, full = g.adj, g.vertex_mask
    if not g.is_connected():
        return HamiltonicityResult(False)
    dead: set[int] = set()

    def extend(path: list[int], visited: int) -> bool:
        if visited == full:
            return True
        cur = path[-1]
        key = visited << 6 | cur
        if key in dead:
            return False
        for w in bits(adj[cur] & ~visited):
            path.append(w)
            if extend(path, visited | 1 << w):
                return True
            path.pop()
        dead.add(key)
        return False

    for s in range(n):
        path = [s]
        if extend(path, 1 << s):
            return HamiltonicityResult(True, tuple(path))
    return HamiltonicityResult(False)


def is_hamiltonian_bipartite(g: Graph, left: int) -> HamiltonicityResult:
    """Hamilton-cycle decision for a bipartite graph with color class mask ``left``.

    A Hamilton cycle alternates between the classes, so unequal classes fail
    at once and the search only extends into the opposite class.
    """
    n = g.n
    right = g.vertex_mask & ~left
    if n < 3:
        raise ValueError("Hamilton cycles are undefined below order 3")
    if any(g.adj[v] & (left if left >> v & 1 else right) for v in range(n)):
        raise ValueError("left is not a color class of a bipartition")
    if left.bit_count() != right.bit_count() or g.min_degree < 2:
        return HamiltonicityResult(False)
    adj = g.adj
    start = (left & -left).bit_length() - 1
    full = g.vertex_mask
    dead: set[int] = set()
    path = [start]

    def extend(cur: int, visited: int) -> bool:
        rest = full & ~visited
        if not rest:
            return bool(adj[cur] >> start & 1)
        key = visited << 6 | cur
        if key in dead:
            return False
        # the last vertex before closing lies in the right class and must see start
        if not adj[start] & rest:
            dead.add(key)
            return False
        for w in bits(adj[cur] & rest):
            path.append(w)
            if extend(w, visited | 1 << w):
                return True
            path.pop()
        dead.add(key)
        return False

    found = extend(start, 1 << start)
    return HamiltonicityResult(found, tuple(path) if found else None)


def validate_witness(g: Graph, walk: Sequence[int], cycle: bool) -> bool:
    if sorted(walk) != list(range(g.n)):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(walk, walk[1:])):
        return False
    return not cycle or g.has_edge(walk[-1], walk[0])


def _need_order3(n: int) -> None:
    if n < 3:
        raise ValueError("hamiltonicity conditions need order at least 3")


def dirac_condition(g: Graph) -> bool:
    """δ(G) >= n/2."""
    _need_order3(g.n)
    return 2 * g.min_degree >= g.n


def chvatal_condition(d: DegreeSequence | Sequence[int]) -> bool:
    """True iff no k < n/2 has d_k <= k and d_{n-k} < n - k."""
    d = d if isinstance(d, DegreeSequence) else DegreeSequence(d)
    n = d.n
    _need_order3(n)
    return not any(d.d(k) <= k and d.d(n - k) < n - k for k in range(1, (n + 1) // 2))


def chvatal_erdos_condition(g: Graph) -> bool:
    """κ(G) >= α(G)."""
    _need_order3(g.n)
    return connectivity(g).kappa >= independence_number(g).alpha


def ota_condition(g: Graph, k: int) -> bool:
    """σ_{p+1}(G) >= n + p² - p for every k <= p <= α(G) - 1.

    Requires G to be k-connected with 2 <= k < α(G); otherwise raises
    :class:`ConditionNotApplicable`.
    """
    _need_order3(g.n)
    alpha = independence_number(g).alpha
    if not 2 <= k < alpha:
        raise ConditionNotApplicable(f"need 2 <= k < alpha(G) = {alpha}, got k = {k}")
    kappa = connectivity(g).kappa
    if kappa < k:
        raise ConditionNotApplicable(f"G is only {kappa}-connected, not {k}-connected")
    n = g.n
    return all(sigma_s(g, p + 1) >= n + p * p - p for p in range(k, alpha))
