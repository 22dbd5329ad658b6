"""Exhaustive checks of the extremal results at small order."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .canon import canonical_form
from .constructions import K, Kbar, build_bipartite_extremal, cone
from .formulas import f, f_domain, phi, phi_domain
from .generation import GenFilter, ScaleError, generate_all
from .graph import Graph, degree_sequence, disjoint_union, join
from .graph6 import decode_graph6
from .hamiltonicity import (
    ConditionNotApplicable,
    chvatal_condition,
    chvatal_erdos_condition,
    dirac_condition,
    is_hamiltonian,
    is_hamiltonian_bipartite,
    is_traceable,
    ota_condition,
)
from .invariants import bondy_connectivity_condition, connectivity, independence_number

log = logging.getLogger(__name__)

NONHAMILTONIAN_SEARCH_LIMIT = 9
NONTRACEABLE_SEARCH_LIMIT = 9
EDGE_SUBSET_LIMIT = 100_000
SWEEP_LIMIT = 8


def _cert(g: Graph) -> str:
    return str(canonical_form(g))


@dataclass
class ExtremalReport:
    target: str
    n: int
    k: int | None
    max_size: int | None
    extremal_graphs: list[str]  # canonical graph6, sorted
    expected_graphs: list[str]
    candidates_examined: int
    formula_value: int
    agrees: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        k = "" if self.k is None else f" k={self.k}"
        lines = [
            f"{self.target} n={self.n}{k}: max_size={self.max_size} formula={self.formula_value} "
            f"extremal={len(self.extremal_graphs)} examined={self.candidates_examined} "
            f"{'AGREES' if self.agrees else 'DISAGREES'}"
        ]
        lines += self.extremal_graphs
        return "\n".join(lines)


def _extremal_search(target, n, k, value, expected, flt, workers, force) -> ExtremalReport:
    found: dict[str, int] = {}
    examined = 0
    for g in generate_all(n, flt, workers=workers, force=force):
        examined += 1
        found[_cert(g)] = g.size
    max_size = max(found.values(), default=None)
    extremal = sorted(c for c, e in found.items() if e == max_size)
    expected_certs = sorted({_cert(h) for h in expected})
    return ExtremalReport(
        target=target,
        n=n,
        k=k,
        max_size=max_size,
        extremal_graphs=extremal,
        expected_graphs=expected_certs,
        candidates_examined=examined,
        formula_value=value,
        agrees=max_size == value and extremal == expected_certs,
    )


def verify_theorem8(n: int, k: int, *, workers: int = 1, force: bool = False) -> ExtremalReport:
    """Largest nonhamiltonian graphs of order n and connectivity k, found exhaustively.

    The search keeps only classes of size at least the size of the predicted
    extremal construction (which is a valid witness), so partial graphs that
    cannot reach it are pruned during generation.
    """
    value, regime = f(n, k)
    if n > NONHAMILTONIAN_SEARCH_LIMIT and not force:
        raise ScaleError(f"exhaustive check at order {n} needs force")
    expected = [spec.build() for spec in regime.extremal_families]
    seed = min(h.size for h in expected)
    flt = GenFilter(min_size=seed, connectivity_exact=k, nonhamiltonian_only=True)
    return _extremal_search("theorem8", n, k, value, expected, flt, workers, force)


def verify_corollary12(n: int, k: int, *, workers: int = 1, force: bool = False) -> ExtremalReport:
    """Largest nontraceable graphs of order n and connectivity k, found exhaustively."""
    value, regime = phi(n, k)
    if n > NONTRACEABLE_SEARCH_LIMIT and not force:
        raise ScaleError(f"exhaustive check at order {n} needs force")
    expected = [spec.build() for spec in regime.extremal_families]
    seed = min(h.size for h in expected)
    flt = GenFilter(min_size=seed, connectivity_exact=k, nontraceable_only=True)
    return _extremal_search("corollary12", n, k, value, expected, flt, workers, force)


def cone_images_match(nontraceable: ExtremalReport, nonhamiltonian: ExtremalReport) -> bool:
    """Coning the nontraceable extremals of (n, k) gives the nonhamiltonian extremals of (n+1, k+1)."""
    coned = sorted({_cert(cone(decode_graph6(s))) for s in nontraceable.extremal_graphs})
    return coned == nonhamiltonian.extremal_graphs


def verify_lemma5(n: int) -> ExtremalReport:
    """Largest nonhamiltonian balanced bipartite graphs of order 2n (δ >= 2 when n >= 4).

    Bipartite adjacency matrices are enumerated by decreasing number of ones,
    stopping after the first size level that contains a nonhamiltonian
    member; every matrix with more ones has been examined by then.
    """
    if not 3 <= n <= 5:
        raise ValueError("verify_lemma5 supports 3 <= n <= 5")
    cells = [(x, n + y) for x in range(n) for y in range(n)]
    left = (1 << n) - 1
    need_deg2 = n >= 4
    examined = 0
    found: set[str] = set()
    max_size = None
    for zeros in range(len(cells) + 1):
        for removed in combinations(range(len(cells)), zeros):
            gone = set(removed)
            g = Graph.from_edges(2 * n, [c for i, c in enumerate(cells) if i not in gone])
            if need_deg2 and g.min_degree < 2:
                continue
            examined += 1
            if not is_hamiltonian_bipartite(g, left).decision:
                found.add(_cert(g))
        if found:
            max_size = len(cells) - zeros
            break
    expected = [_cert(build_bipartite_extremal(n))]
    return ExtremalReport(
        target="lemma5",
        n=n,
        k=None,
        max_size=max_size,
        extremal_graphs=sorted(found),
        expected_graphs=expected,
        candidates_examined=examined,
        formula_value=n * n - 2 * n + 4,
        agrees=max_size == n * n - 2 * n + 4 and sorted(found) == expected,
    )


def join_template(s: int, t: int, template: str) -> tuple[Graph, int]:
    """K_s ∨ K̄_t or K_s ∨ (K2 + K̄_t), with the mask of the K̄_t vertices."""
    if t < 2 or s < 1:
        raise ValueError("need s >= 1 and t >= 2")
    if template == "plain":
        return join(K(s), Kbar(t)), ((1 << t) - 1) << s
    if template == "plus_k2":
        return join(K(s), disjoint_union(K(2), Kbar(t))), ((1 << t) - 1) << (s + 2)
    raise ValueError(f"unknown template {template!r}")


@dataclass
class EdgeDeletionReport:
    s: int
    t: int
    template: str
    f: int
    subsets_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}

    def to_text(self) -> str:
        head = (
            f"lemma7 s={self.s} t={self.t} template={self.template} f={self.f}: "
            f"{self.subsets_checked} edge sets, {'HOLDS' if self.holds else 'FAILS'}"
        )
        return "\n".join([head] + [json.dumps(c, sort_keys=True) for c in self.counterexamples])


def verify_lemma7(s: int, t: int, template: str, f: int, *, force: bool = False) -> EdgeDeletionReport:
    """Check every f-subset F of E(G): κ(G-F) >= s-f, with equality iff F is a star at a K̄_t vertex."""
    g, independent = join_template(s, t, template)
    if not 0 <= f <= s:
        raise ValueError("need 0 <= f <= s")
    edges = g.edges()
    from math import comb

    if comb(len(edges), f) > EDGE_SUBSET_LIMIT and not force:
        raise ScaleError(f"{comb(len(edges), f)} edge subsets exceed the limit without force")
    report = EdgeDeletionReport(s, t, template, f)
    for chosen in combinations(edges, f):
        report.subsets_checked += 1
        kappa = connectivity(g.remove_edges(chosen)).kappa
        common = f == 0 or any(
            all(w in e for e in chosen) for w in range(g.n) if independent >> w & 1
        )
        if kappa < s - f or (kappa == s - f) != common:
            report.counterexamples.append({"F": [list(e) for e in chosen], "kappa": kappa, "star": common})
    return report


@dataclass
class ConditionTally:
    fired: int = 0
    fired_and_hamiltonian: int = 0
    silent_but_hamiltonian: int = 0
    not_applicable: int = 0


@dataclass
class SweepReport:
    n_max: int
    graphs: int = 0
    per_order: dict[int, int] = field(default_factory=dict)
    tallies: dict[str, ConditionTally] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    above_f_checked: int = 0
    above_f_violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.above_f_violations

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}

    def to_text(self) -> str:
        lines = [f"condition sweep n<={self.n_max}: {self.graphs} graphs {dict(sorted(self.per_order.items()))}"]
        for name, t in self.tallies.items():
            lines.append(
                f"  {name:14s} fired={t.fired} fired&ham={t.fired_and_hamiltonian} "
                f"silent&ham={t.silent_but_hamiltonian} n/a={t.not_applicable}"
            )
        lines.append(f"  violations={len(self.violations)}")
        lines.append(
            f"  above f(n,k): {self.above_f_checked} graphs, "
            f"violations={len(self.above_f_violations)}"
        )
        return "\n".join(lines)


def condition_soundness_sweep(n_max: int, *, workers: int = 1, force: bool = False) -> SweepReport:
    """Audit every sufficient condition against the exact solvers on all graphs of order <= n_max.

    The same pass checks that every graph of connectivity k with more than
    f(n, k) edges is hamiltonian.
    """
    if n_max > SWEEP_LIMIT and not force:
        raise ScaleError(f"sweep beyond order {SWEEP_LIMIT} needs force")
    from .graph6 import encode_graph6

    report = SweepReport(n_max)
    names = ("dirac", "chvatal", "chvatal_erdos", "ota", "bondy")
    report.tallies = {name: ConditionTally() for name in names}

    def violation(g: Graph, name: str, detail: str) -> None:
        report.violations.append({"graph6": encode_graph6(g).decode(), "condition": name, "detail": detail})

    for n in range(1, n_max + 1):
        count = 0
        for g in generate_all(n, workers=workers, force=force):
            count += 1
            d = degree_sequence(g)
            kappa = connectivity(g).kappa
            for k in range(n - 1):
                fired = bondy_connectivity_condition(d, k)
                tally = report.tallies["bondy"]
                tally.fired += fired
                if fired:
                    tally.fired_and_hamiltonian += kappa >= k + 1
                    if kappa < k + 1:
                        violation(g, "bondy", f"k={k} kappa={kappa}")
            if n < 3:
                continue
            ham = is_hamiltonian(g).decision
            alpha = independence_number(g).alpha
            verdicts = {
                "dirac": dirac_condition(g),
                "chvatal": chvatal_condition(d),
                "chvatal_erdos": chvatal_erdos_condition(g),
            }
            try:
                verdicts["ota"] = ota_condition(g, kappa)
            except ConditionNotApplicable:
                report.tallies["ota"].not_applicable += 1
            for name, fired in verdicts.items():
                tally = report.tallies[name]
                if fired:
                    tally.fired += 1
                    tally.fired_and_hamiltonian += ham
                    if not ham:
                        violation(g, name, f"kappa={kappa} alpha={alpha}")
                elif ham:
                    tally.silent_but_hamiltonian += 1
            if kappa >= 1:
                if f_domain(n, kappa):
                    if g.size > f(n, kappa)[0]:
                        report.above_f_checked += 1
                        if not ham:
                            report.above_f_violations.append(
                                {"graph6": encode_graph6(g).decode(), "kappa": kappa, "size": g.size}
                            )
                elif not ham:
                    report.above_f_violations.append(
                        {"graph6": encode_graph6(g).decode(), "kappa": kappa, "size": g.size, "domain": False}
                    )
        report.per_order[n] = count
        report.graphs += count
    return report


def feasible_f_pairs(n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(n_lo, n_hi + 1) for k in range(1, n) if f_domain(n, k)]


def feasible_phi_pairs(n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    return [(n, k) for n in range(n_lo, n_hi + 1) for k in range(1, n) if phi_domain(n, k)]


def reverify(report: ExtremalReport) -> list[str]:
    """Recompute order, size, connectivity and (non)hamiltonicity of each listed extremal graph.

    Returns a list of problems (empty when everything checks out).
    """
    problems = []
    for s in report.extremal_graphs:
        g = decode_graph6(s)
        if g.n != report.n or g.size != report.max_size:
            problems.append(f"{s}: order/size mismatch")
        if report.k is not None and connectivity(g).kappa != report.k:
            problems.append(f"{s}: connectivity differs from {report.k}")
        if report.target == "corollary12":
            bad = is_traceable(g).decision
        else:
            bad = is_hamiltonian(g).decision
        if bad:
            problems.append(f"{s}: has the forbidden spanning cycle/path")
    if len(set(report.extremal_graphs)) != len(report.extremal_graphs):
        problems.append("duplicate isomorphism classes")
    return problems
