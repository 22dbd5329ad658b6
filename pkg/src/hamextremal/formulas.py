"""Closed-form extremal sizes for nonhamiltonian and nontraceable graphs."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .constructions import FamilySpec


class FormulaDomainError(ValueError):
    """No graph with the requested order and connectivity exists."""


@dataclass(frozen=True)
class FormulaRegime:
    branch: str
    extremal_families: tuple[FamilySpec, ...]

    def __post_init__(self) -> None:
        if not self.extremal_families:
            raise ValueError("a regime must name at least one extremal family")

    @property
    def tags(self) -> str:
        return "+".join(str(f) for f in self.extremal_families)


def _div8(a: int) -> int:
    q, r = divmod(a, 8)
    if r:
        raise ArithmeticError(f"{a} not divisible by 8 (parity/regime bug)")
    return q


def f_domain(n: int, k: int) -> bool:
    return k >= 1 and n >= (2 * k + 1 if n % 2 else 2 * k + 2)


def phi_domain(n: int, k: int) -> bool:
    return k >= 1 and n >= (2 * k + 3 if n % 2 else 2 * k + 2)


def f(n: int, k: int) -> tuple[int, FormulaRegime]:
    """Maximum size of a nonhamiltonian graph of order n and connectivity exactly k."""
    if not f_domain(n, k):
        raise FormulaDomainError(f"no nonhamiltonian graph of order {n} has connectivity {k}")
    wide = comb(n - k, 2) + k * k
    ks = FamilySpec("k_split", n, k)
    odd = n % 2 == 1
    if odd and n >= 6 * k - 5:
        if n == 6 * k - 5:
            return wide, FormulaRegime("boundary_6k5", (ks, FamilySpec("g1", n, k)))
        return wide, FormulaRegime("wide", (ks,))
    if not odd and n >= 6 * k - 8:
        if n == 6 * k - 8:
            return wide, FormulaRegime("boundary_6k8", (ks, FamilySpec("g2", n, k)))
        return wide, FormulaRegime("wide", (ks,))
    if odd:
        assert 2 * k + 1 <= n <= 6 * k - 7
        return _div8(3 * n * n - 8 * n + 5) + k, FormulaRegime("odd_narrow", (FamilySpec("g1", n, k),))
    assert 2 * k + 2 <= n <= 6 * k - 10
    return _div8(3 * n * n - 10 * n + 16) + k, FormulaRegime("even_narrow", (FamilySpec("g2", n, k),))


def phi(n: int, k: int) -> tuple[int, FormulaRegime]:
    """Maximum size of a nontraceable graph of order n and connectivity exactly k."""
    if not phi_domain(n, k):
        raise FormulaDomainError(f"no nontraceable graph of order {n} has connectivity {k}")
    wide = comb(n - k - 1, 2) + k * (k + 1)
    ts = FamilySpec("trace_split", n, k)
    odd = n % 2 == 1
    if odd and n >= 6 * k - 3:
        if n == 6 * k - 3:
            return wide, FormulaRegime("boundary_6k3", (ts, FamilySpec("h1", n, k)))
        return wide, FormulaRegime("wide", (ts,))
    if not odd and n >= 6 * k:
        if n == 6 * k:
            return wide, FormulaRegime("boundary_6k", (ts, FamilySpec("h2", n, k)))
        return wide, FormulaRegime("wide", (ts,))
    if odd:
        assert 2 * k + 3 <= n <= 6 * k - 5
        return _div8(3 * n * n - 12 * n + 17) + k, FormulaRegime("odd_narrow", (FamilySpec("h1", n, k),))
    assert 2 * k + 2 <= n <= 6 * k - 2
    return _div8(3 * n * n - 10 * n + 8) + k, FormulaRegime("even_narrow", (FamilySpec("h2", n, k),))


def _g_domain(n: int, k: int) -> None:
    if not 1 <= k or not 2 * k < n:
        raise FormulaDomainError(f"g(n,k) needs 1 <= k < n/2; got n={n}, k={k}")


def g_formula(n: int, k: int) -> int:
    """Maximum size of a k-connected nonhamiltonian graph of order n (closed form)."""
    _g_domain(n, k)
    return max(comb(n - k, 2) + k * k, comb((n + 2) // 2, 2) + ((n - 1) // 2) ** 2)


def _f_over_connectivities(n: int, k: int) -> dict[int, int]:
    _g_domain(n, k)
    return {c: f(n, c)[0] for c in range(k, (n + 1) // 2) if f_domain(n, c)}


def g_via_max(n: int, k: int) -> int:
    """max f(n, c) over k <= c < n/2; equals :func:`g_formula` everywhere."""
    return max(_f_over_connectivities(n, k).values())


def g_maximizers(n: int, k: int) -> list[int]:
    """Connectivities c in [k, n/2) with f(n, c) = g(n, k)."""
    values = _f_over_connectivities(n, k)
    top = max(values.values())
    return [c for c, v in values.items() if v == top]


def ore_bound(n: int) -> int:
    """Maximum size of a nonhamiltonian graph of order n."""
    if n < 3:
        raise FormulaDomainError("ore_bound needs n >= 3")
    return comb(n - 1, 2) + 1
