"""Builders for the extremal nonhamiltonian and nontraceable graph families.

Every join places its left operand at indices ``0..|left|-1``.  Edge-deleted
families always remove edges between the first vertex of the independent
part and clique vertices ``0, 1, 2, ...`` in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, disjoint_union, join

FAMILIES = ("g1", "g2", "h1", "h2", "k_split", "trace_split", "ore1", "ore2", "bipartite_extremal")


class DomainError(ValueError):
    """Parameters outside the family's domain."""


def K(n: int) -> Graph:
    return Graph.complete(n)


def Kbar(n: int) -> Graph:
    return Graph.empty(n)


def _strip_star(base: Graph, clique: int, deletions: int) -> Graph:
    w = clique  # first vertex after the clique part
    return base.remove_edges((w, c) for c in range(deletions))


def cone(g: Graph) -> Graph:
    """G ∨ K1; the new universal vertex gets index ``g.n``."""
    return join(g, K(1))


def build_g1(n: int, k: int) -> Graph:
    """K_{(n-1)/2} ∨ K̄_{(n+1)/2} minus (n-1)/2 - k edges at one independent vertex."""
    if k < 1 or n % 2 == 0 or n < 2 * k + 1:
        raise DomainError(f"G1(n,k) needs odd n >= 2k+1, k >= 1; got n={n}, k={k}")
    c = (n - 1) // 2
    return _strip_star(join(K(c), Kbar(c + 1)), c, c - k)


def build_g2(n: int, k: int) -> Graph:
    """K_{(n-2)/2} ∨ (K2 + K̄_{(n-2)/2}) minus (n-2)/2 - k edges at one independent vertex."""
    if k < 1 or n % 2 or n < 2 * k + 2:
        raise DomainError(f"G2(n,k) needs even n >= 2k+2, k >= 1; got n={n}, k={k}")
    c = (n - 2) // 2
    # K2 occupies c..c+1, the independent part starts at c+2
    g = join(K(c), disjoint_union(K(2), Kbar(c)))
    return g.remove_edges((c + 2, v) for v in range(c - k))


def build_h1(n: int, k: int) -> Graph:
    """K_{(n-3)/2} ∨ (K2 + K̄_{(n-1)/2}) minus (n-3)/2 - k edges at one independent vertex."""
    if k < 1 or n % 2 == 0 or n < 2 * k + 3:
        raise DomainError(f"H1(n,k) needs odd n >= 2k+3, k >= 1; got n={n}, k={k}")
    c = (n - 3) // 2
    g = join(K(c), disjoint_union(K(2), Kbar(c + 1)))
    return g.remove_edges((c + 2, v) for v in range(c - k))


def build_h2(n: int, k: int) -> Graph:
    """K_{(n-2)/2} ∨ K̄_{(n+2)/2} minus (n-2)/2 - k edges at one independent vertex."""
    if k < 1 or n % 2 or n < 2 * k + 2:
        raise DomainError(f"H2(n,k) needs even n >= 2k+2, k >= 1; got n={n}, k={k}")
    c = (n - 2) // 2
    return _strip_star(join(K(c), Kbar(c + 2)), c, c - k)


def build_k_split(n: int, k: int) -> Graph:
    """K_k ∨ (K_{n-2k} + K̄_k)."""
    if k < 1 or n < 2 * k + 1:
        raise DomainError(f"k_split needs n >= 2k+1, k >= 1; got n={n}, k={k}")
    return join(K(k), disjoint_union(K(n - 2 * k), Kbar(k)))


def build_trace_split(n: int, k: int) -> Graph:
    """K_k ∨ (K_{n-2k-1} + K̄_{k+1})."""
    if k < 1 or n < 2 * k + 2:
        raise DomainError(f"trace_split needs n >= 2k+2, k >= 1; got n={n}, k={k}")
    return join(K(k), disjoint_union(K(n - 2 * k - 1), Kbar(k + 1)))


def build_ore1(n: int) -> Graph:
    """K1 ∨ (K_{n-2} + K1)."""
    if n < 3:
        raise DomainError(f"ore1 needs n >= 3; got n={n}")
    return join(K(1), disjoint_union(K(n - 2), K(1)))


def build_ore2() -> Graph:
    """K2 ∨ K̄3."""
    return join(K(2), Kbar(3))


def build_bipartite_extremal(n: int) -> Graph:
    """K_{n,n-2} + 4e: parts X = 0..n-1 and Y = n..2n-1.

    Y vertices n..2n-3 are joined to all of X; the last two are joined to
    x0 and x1 only.  At n = 3 the vertex x2 keeps a single neighbour, so the
    minimum degree 2 holds only from n = 4 on.
    """
    if n < 3:
        raise DomainError(f"K_(n,n-2)+4e needs n >= 3; got n={n}")
    edges = [(x, y) for x in range(n) for y in range(n, 2 * n - 2)]
    edges += [(x, y) for x in (0, 1) for y in (2 * n - 2, 2 * n - 1)]
    return Graph.from_edges(2 * n, edges)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.family in ("ore1", "ore2", "bipartite_extremal"):
            if self.k is not None:
                raise DomainError(f"{self.family} takes no connectivity parameter")
        elif self.k is None:
            raise DomainError(f"{self.family} needs a connectivity parameter")
        if self.family == "ore2" and self.n != 5:
            raise DomainError("ore2 has fixed order 5")

    def build(self) -> Graph:
        f = self.family
        if f == "ore1":
            return build_ore1(self.n)
        if f == "ore2":
            return build_ore2()
        if f == "bipartite_extremal":
            return build_bipartite_extremal(self.n)
        return _BUILDERS[f](self.n, self.k)

    def predicted_size(self) -> int:
        n, k = self.n, self.k
        f = self.family
        if f == "g1":
            return _exact_div(3 * n * n - 8 * n + 5, 8) + k
        if f == "g2":
            return _exact_div(3 * n * n - 10 * n + 16, 8) + k
        if f == "h1":
            return _exact_div(3 * n * n - 12 * n + 17, 8) + k
        if f == "h2":
            return _exact_div(3 * n * n - 10 * n + 8, 8) + k
        if f == "k_split":
            return comb(n - k, 2) + k * k
        if f == "trace_split":
            return comb(n - k - 1, 2) + k * (k + 1)
        if f == "ore1":
            return comb(n - 1, 2) + 1
        if f == "ore2":
            return 7
        return n * n - 2 * n + 4

    @property
    def traceability_family(self) -> bool:
        """True for the nontraceable families, False for the nonhamiltonian ones."""
        return self.family in ("h1", "h2", "trace_split")

    def __str__(self) -> str:
        return self.family if self.k is None else f"{self.family}({self.n},{self.k})"


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


_BUILDERS = {
    "g1": build_g1,
    "g2": build_g2,
    "h1": build_h1,
    "h2": build_h2,
    "k_split": build_k_split,
    "trace_split": build_trace_split,
}


def valid_parameters(family: str, n_max: int) -> list[FamilySpec]:
    """Every valid (n, k) instance of ``family`` with order at most ``n_max``."""
    out = []
    if family == "ore2":
        return [FamilySpec("ore2", 5)] if n_max >= 5 else []
    if family == "ore1":
        return [FamilySpec("ore1", n) for n in range(3, n_max + 1)]
    if family == "bipartite_extremal":
        return [FamilySpec(family, p) for p in range(3, n_max // 2 + 1)]
    for n in range(1, n_max + 1):
        for k in range(1, n):
            try:
                _BUILDERS[family](n, k)
            except DomainError:
                continue
            out.append(FamilySpec(family, n, k))
    return out
