"""Command-line interface: formula tables, constructions, diagnostics, verification."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Iterable, TextIO

from . import formulas
from .constructions import FAMILIES, DomainError, FamilySpec
from .generation import GenFilter, ScaleError, generate_all
from .graph import Graph, degree_sequence
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .hamiltonicity import (
    ConditionNotApplicable,
    chvatal_condition,
    chvatal_erdos_condition,
    dirac_condition,
    is_hamiltonian,
    is_traceable,
    ota_condition,
)
from .invariants import bondy_connectivity_condition, connectivity, independence_number
from . import verification

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"7"`` -> [7]; ``"2..5"`` -> [2, 3, 4, 5]."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


# -- table ----------------------------------------------------------------


def _cell(what: str, n: int, k: int) -> tuple[int, str, str] | None:
    try:
        if what == "g":
            value = formulas.g_formula(n, k)
            return value, "ota", " ".join(f"c={c}" for c in formulas.g_maximizers(n, k))
        value, regime = getattr(formulas, what)(n, k)
        return value, regime.branch, regime.tags
    except formulas.FormulaDomainError:
        return None


def cmd_table(args, out: TextIO) -> int:
    ns, ks = parse_range(args.n), parse_range(args.k)
    cells = {(n, k): _cell(args.what, n, k) for n in ns for k in ks}
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k", "value", "regime", "extremal_families"])
        for (n, k), c in cells.items():
            w.writerow([n, k, *(c if c else ("—", "", ""))])
    elif args.format == "json":
        rows = [
            {"n": n, "k": k, "value": c[0], "regime": c[1], "extremal_families": c[2]} if c else
            {"n": n, "k": k, "value": None}
            for (n, k), c in cells.items()
        ]
        out.write(json.dumps(rows) + "\n")
    else:
        head = [f"n\\k"] + [str(k) for k in ks]
        body = [[str(n)] + [str(cells[n, k][0]) if cells[n, k] else "—" for k in ks] for n in ns]
        widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
        for row in [head] + body:
            out.write("  ".join(x.rjust(w) for x, w in zip(row, widths)) + "\n")
    return EXIT_OK


# -- construct ------------------------------------------------------------


def summarize(g: Graph) -> dict:
    kap = connectivity(g)
    alpha = independence_number(g)
    record = {
        "graph6": encode_graph6(g).decode(),
        "n": g.n,
        "e": g.size,
        "degree_sequence": list(degree_sequence(g)),
        "kappa": kap.kappa,
        "cut": None if kap.witness_cut is None else list(kap.witness_cut),
        "alpha": alpha.alpha,
        "independent_set": list(alpha.witness_set),
    }
    if g.n >= 3:
        ham = is_hamiltonian(g)
        record["hamiltonian"] = ham.decision
        record["cycle"] = list(ham.witness) if ham.witness else None
    else:
        record["hamiltonian"] = None
        record["cycle"] = None
    trace = is_traceable(g) if g.n else None
    record["traceable"] = trace.decision if trace else None
    record["path"] = list(trace.witness) if trace and trace.witness else None
    return record


def conditions(g: Graph, kappa: int) -> dict:
    d = degree_sequence(g)
    fired: dict = {}
    if g.n >= 3:
        fired["dirac"] = dirac_condition(g)
        fired["chvatal"] = chvatal_condition(d)
        fired["chvatal_erdos"] = chvatal_erdos_condition(g)
        try:
            fired["ota"] = ota_condition(g, kappa)
        except ConditionNotApplicable:
            fired["ota"] = None
    fired["bondy"] = [k for k in range(max(g.n - 1, 0)) if bondy_connectivity_condition(d, k)]
    return fired


def _yn(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


def _render_record(rec: dict) -> str:
    lines = [
        rec["graph6"],
        f"  order={rec['n']} size={rec['e']} degrees={','.join(map(str, rec['degree_sequence']))}",
        f"  kappa={rec['kappa']} cut={rec['cut']}  alpha={rec['alpha']} independent={rec['independent_set']}",
        f"  hamiltonian={_yn(rec['hamiltonian'])} cycle={rec['cycle']}",
        f"  traceable={_yn(rec['traceable'])} path={rec['path']}",
    ]
    if "conditions" in rec:
        c = rec["conditions"]
        parts = [f"{name}={_yn(c[name])}" for name in ("dirac", "chvatal", "chvatal_erdos", "ota") if name in c]
        parts.append(f"bondy_k={c['bondy']}")
        lines.append("  conditions: " + " ".join(parts))
    return "\n".join(lines)


_FAMILY_ALIASES = {name.replace("_", "-"): name for name in FAMILIES}


def cmd_construct(args, out: TextIO) -> int:
    family = _FAMILY_ALIASES.get(args.family, args.family)
    k = args.k
    if family in ("ore1", "ore2", "bipartite_extremal"):
        if k is not None:
            raise UsageError(f"{args.family} takes no --k")
    elif k is None:
        raise UsageError(f"{args.family} needs --k")
    n = 5 if family == "ore2" and args.n is None else args.n
    if n is None:
        raise UsageError("--n is required")
    spec = FamilySpec(family, n, k)
    g = spec.build()
    rec = summarize(g)
    rec["family"] = str(spec)
    rec["predicted_size"] = spec.predicted_size()
    if args.format == "json":
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        out.write(_render_record(rec) + "\n")
        out.write(f"  family={spec} predicted_size={rec['predicted_size']}\n")
    return EXIT_OK


# -- check ----------------------------------------------------------------


def _lines(args) -> Iterable[str]:
    if args.graphs:
        yield from args.graphs
    else:
        for line in sys.stdin:
            yield line


def cmd_check(args, out: TextIO, err: TextIO) -> int:
    status = EXIT_OK
    for lineno, raw in enumerate(_lines(args), 1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = decode_graph6(text)
        except (Graph6Error, ValueError) as exc:
            err.write(f"line {lineno}: {exc}\n")
            status = EXIT_USAGE
            continue
        rec = summarize(g)
        rec["conditions"] = conditions(g, rec["kappa"])
        if args.format == "json":
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            out.write(_render_record(rec) + "\n")
    return status


# -- verify ---------------------------------------------------------------


def _emit(report, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    else:
        out.write(report.to_text() + "\n")


def cmd_verify(args, out: TextIO) -> int:
    ok = True
    t = args.target
    if t in ("theorem8", "corollary12"):
        if args.n is None:
            raise UsageError("--n is required")
        domain = formulas.f_domain if t == "theorem8" else formulas.phi_domain
        run = verification.verify_theorem8 if t == "theorem8" else verification.verify_corollary12
        pairs = [
            (n, k)
            for n in parse_range(args.n)
            for k in (parse_range(args.k) if args.k else range(1, n))
            if domain(n, k)
        ]
        if not pairs:
            raise UsageError("no feasible (n, k) pair in the requested ranges")
        for n, k in pairs:
            report = run(n, k, workers=args.workers, force=args.force)
            _emit(report, args.format, out)
            ok &= report.agrees
    elif t == "lemma5":
        if args.n is None:
            raise UsageError("--n is required")
        for n in parse_range(args.n):
            report = verification.verify_lemma5(n)
            _emit(report, args.format, out)
            ok &= report.agrees
    elif t == "lemma7":
        if args.s is None or args.t is None or args.f is None:
            raise UsageError("lemma7 needs --s, --t and --f")
        templates = ["plain", "plus_k2"] if args.template == "both" else [args.template.replace("-", "_")]
        for s in parse_range(args.s):
            for tt in parse_range(args.t):
                for tpl in templates:
                    for f in parse_range(args.f):
                        if f > s:
                            continue
                        report = verification.verify_lemma7(s, tt, tpl, f, force=args.force)
                        _emit(report, args.format, out)
                        ok &= report.holds
    elif t == "conditions":
        report = verification.condition_soundness_sweep(args.n_max, workers=args.workers, force=args.force)
        _emit(report, args.format, out)
        ok = report.ok
    return EXIT_OK if ok else EXIT_DISAGREE


# -- sweep ----------------------------------------------------------------


def cmd_sweep(args, out: TextIO) -> int:
    flt = GenFilter(
        min_size=args.min_size,
        max_size=args.max_size,
        connectivity_exact=args.connectivity,
        nonhamiltonian_only=args.nonhamiltonian,
        nontraceable_only=args.nontraceable,
    )
    count = 0
    for g in generate_all(args.n, flt, workers=args.workers, force=args.force):
        count += 1
        if not args.count:
            out.write(encode_graph6(g).decode() + "\n")
    if args.count:
        out.write(f"{count}\n")
    return EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hamextremal", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate f, phi or g")
    t.add_argument("--what", choices=["f", "phi", "g"], required=True)
    t.add_argument("--n", required=True, help="N or LO..HI")
    t.add_argument("--k", required=True, help="K or LO..HI")
    t.add_argument("--format", choices=["text", "csv", "json"], default="text")

    c = sub.add_parser("construct", help="build an extremal family member")
    c.add_argument("--family", required=True, choices=sorted({*FAMILIES, *_FAMILY_ALIASES}))
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--format", choices=["text", "json"], default="text")

    ch = sub.add_parser("check", help="diagnose graph6 graphs (arguments or stdin)")
    ch.add_argument("graphs", nargs="*")
    ch.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="exhaustive verification runs")
    v.add_argument("target", choices=["theorem8", "corollary12", "lemma5", "lemma7", "conditions"])
    v.add_argument("--n")
    v.add_argument("--k")
    v.add_argument("--s")
    v.add_argument("--t")
    v.add_argument("--f")
    v.add_argument("--template", default="both", choices=["plain", "plus_k2", "plus-k2", "both"])
    v.add_argument("--n-max", type=int, default=7)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--force", action="store_true")
    v.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("sweep", help="emit every graph of order n passing the filters")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--min-size", type=int)
    s.add_argument("--max-size", type=int)
    s.add_argument("--connectivity", type=int)
    s.add_argument("--nonhamiltonian", action="store_true")
    s.add_argument("--nontraceable", action="store_true")
    s.add_argument("--count", action="store_true", help="print only the number of graphs")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--force", action="store_true")
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    try:
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "check":
            return cmd_check(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_sweep(args, out)
    except ScaleError as exc:
        err.write(f"refused: {exc} (--force overrides)\n")
        return EXIT_SCALE
    except (UsageError, DomainError, formulas.FormulaDomainError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
