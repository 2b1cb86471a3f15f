"""Command-line driver: ``groebnercheck <subcommand> ...``.

Exit codes: 0 success, 1 refuted check (or DiffsFound on a strict case),
2 usage / parse / IO error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cases
from .analyze import (
    is_zero_dimensional,
    leading_terms,
    leading_terms_from_polys,
    standard_monomials,
)
from .errors import CapExceeded, GroebnerCheckError, IoError, ParseError, ResourceLimit
from .groebner import Limits, buchberger, normal_form, radical_member
from .modular import sample_structure
from .parse import Entry, SystemFile, format_monomial, format_system, load_system, print_poly
from .poly import TermOrder, conjugate, dehomogenize, reduced_table
from .scalars import PRIME_WINDOW, primes_in_window
from .variety import DEFAULT_CAP, brute_force

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class CliConfig:
    subcommand: str
    order: str = "grevlex"
    priority: list | None = None
    format: str = "text"
    limits: Limits = Limits()
    prime: int | None = None
    count: int = 20
    window: tuple = PRIME_WINDOW
    workers: int = 1
    fixtures: Path | None = None

    @classmethod
    def from_args(cls, a) -> CliConfig:
        prio = [v for v in a.vars.split(",") if v] if a.vars else None
        return cls(
            subcommand=a.command, order=a.order, priority=prio, format=a.format,
            limits=Limits(a.max_pairs, a.max_terms), prime=getattr(a, "prime", None),
            count=getattr(a, "count", 20), window=(a.prime_lo, a.prime_hi),
            workers=a.workers, fixtures=Path(a.fixtures) if a.fixtures else None,
        )

    def term_order(self, table) -> TermOrder:
        return TermOrder.make(self.order, table, self.priority)


def _order_text(order: TermOrder, table) -> str:
    return f"{order.kind} ({' > '.join(table.names[i] for i in order.priority)})"


def _emit(cfg: CliConfig, text: str, payload: dict):
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gb(cfg, a):
    sf = load_system(a.file)
    order = cfg.term_order(sf.table)
    G = buchberger(sf.generators(), order, cfg.limits)
    basis = [print_poly(g) for g in G]
    _emit(cfg, "\n".join(basis), {
        "order": _order_text(order, sf.table), "basis": basis,
        "leading_terms": [format_monomial(m, sf.table) for m in G.leading_monomials()],
        "pairs": G.stats.pairs,
    })
    return EXIT_OK


def _split(sf: SystemFile, name: str):
    """The named polynomial and every other generator of the file."""
    if name not in sf:
        raise GroebnerCheckError(f"no entry named {name!r} in {sf.source}")
    entry = sf[name]
    if entry.is_list:
        raise GroebnerCheckError(f"entry {name!r} is a list; name a single polynomial")
    rest = SystemFile(sf.table, [e for e in sf.entries if e.name != name], sf.closure_conj)
    return entry.poly, rest.generators()


def _cmd_nf(cfg, a):
    sf = load_system(a.file)
    f, F = _split(sf, a.f)
    order = cfg.term_order(sf.table)
    G = buchberger(F, order, cfg.limits) if F else None
    r = normal_form(f, G.generators if G else [], order, cfg.limits)
    _emit(cfg, print_poly(r), {"order": _order_text(order, sf.table), "name": a.f,
                               "normal_form": print_poly(r), "member": r.is_zero()})
    return EXIT_OK


def _cmd_radical(cfg, a):
    sf = load_system(a.file)
    f, F = _split(sf, a.f)
    order = cfg.term_order(sf.table)
    member = radical_member(f, F, order, cfg.limits)
    _emit(cfg, "true" if member else "false",
          {"order": _order_text(order, sf.table), "name": a.f, "radical_member": member})
    return EXIT_OK if member else EXIT_REFUTED


def _cmd_solve_zp(cfg, a):
    sf = load_system(a.file)
    V = brute_force(sf.generators(), a.prime, a.cap, cfg.workers)
    pts = [list(p) for p in V.points]
    text = "\n".join(" ".join(map(str, p)) for p in pts) if pts else "(no points)"
    _emit(cfg, text, {"prime": a.prime, "variables": list(sf.table.names),
                      "count": len(pts), "points": pts})
    return EXIT_OK


def _cmd_finiteness(cfg, a):
    sf = load_system(a.file)
    if sf.kind == "leading-terms":
        H = leading_terms_from_polys(sf.generators(with_closure=False), sf.table)
    else:
        H = leading_terms(buchberger(sf.generators(), cfg.term_order(sf.table), cfg.limits))
    zd = is_zero_dimensional(H, sf.table)
    n = standard_monomials(H, sf.table) if zd else None
    text = f"zero-dimensional: {'yes' if zd else 'no'}"
    if zd:
        text += f"\nstandard monomials: {n}"
    _emit(cfg, text, {"source": H.source, "zero_dimensional": zd, "standard_monomials": n,
                      "leading_terms": [format_monomial(m, sf.table) for m in H.monomials]})
    return EXIT_OK if zd else EXIT_REFUTED


def _rewrite(sf: SystemFile, table, fn) -> SystemFile:
    entries = [Entry(e.name, e.citation, [fn(f) for f in e.polys], e.is_list, e.suspect)
               for e in sf.entries]
    return SystemFile(table, entries, sf.closure_conj, sf.kind)


def _cmd_dehom(cfg, a):
    sf = load_system(a.file)
    full = reduced_table()
    out = _rewrite(sf, full, dehomogenize)
    used = {n for e in out.entries for f in e.polys for n in f.used_variables()}
    # keep a conjugation-closed set of used variables
    keep = [n for n in full.names
            if n in used or full.names[full.conj[full.index(n)]] in used]
    table = full.restrict(keep)
    out = _rewrite(out, table, lambda f: f.retable(table))
    _emit(cfg, format_system(out).rstrip("\n"), _system_json(out))
    return EXIT_OK


def _cmd_conj(cfg, a):
    sf = load_system(a.file)
    out = _rewrite(sf, sf.table, conjugate)
    _emit(cfg, format_system(out).rstrip("\n"), _system_json(out))
    return EXIT_OK


def _system_json(sf: SystemFile) -> dict:
    return {"variables": list(sf.table.names),
            "entries": [{"name": e.name, "citation": e.citation,
                         "polys": [print_poly(f) for f in e.polys]} for e in sf.entries]}


def _cmd_sample(cfg, a):
    sf = load_system(a.file)
    order = cfg.term_order(sf.table)
    primes = primes_in_window(a.count, *cfg.window)
    rep = sample_structure(sf.generators(), order, primes, cfg.limits, cfg.workers)
    maj = rep.majority_skeleton
    shape = None if maj is None else [[format_monomial(m, sf.table) for m in g] for g in maj]
    lines = [f"order: {_order_text(order, sf.table)}",
             f"primes: {len(primes)}  agreeing: {rep.agreeing}",
             f"dissenting: {rep.dissenting or 'none'}",
             f"failures: {rep.failures or 'none'}"]
    if shape is not None:
        lines.append("majority skeleton:")
        lines += ["  " + " + ".join(g) for g in shape]
    _emit(cfg, "\n".join(lines), {
        "order": _order_text(order, sf.table), "primes": primes, "agreeing": rep.agreeing,
        "dissenting": rep.dissenting, "failures": rep.failures, "majority_skeleton": shape,
        "samples": [{"prime": s.prime, "status": s.status, "detail": s.detail}
                    for s in rep.samples],
    })
    return EXIT_OK if rep.unanimous else EXIT_REFUTED


def _cmd_verify(cfg, a):
    if a.case == "all":
        reports = cases.run_all(cfg.order, cfg.fixtures, cfg.limits, cfg.workers)
    elif a.case in cases.CASES:
        reports = [cases.run_case(a.case, cfg.order, cfg.fixtures, cfg.limits, cfg.workers)]
    else:
        print(f"error: unknown case {a.case!r}; known: {', '.join(sorted(cases.CASES))}, all",
              file=sys.stderr)
        return EXIT_USAGE
    if cfg.format == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload if a.case == "all" else payload[0], indent=2))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    if any(r.gates for r in reports):
        return EXIT_REFUTED
    skipped = [r for r in reports if r.status == cases.SKIPPED]
    if any(r.certificates.get("skip_kind") == "ResourceLimit" for r in skipped):
        return EXIT_RESOURCE
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=("lex", "grlex", "grevlex"), default="grevlex",
                        help="term order (default grevlex)")
    common.add_argument("--vars", metavar="V1,V2,...",
                        help="variable priority, largest first; overrides the file header order")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-pairs", type=int, default=Limits.max_pairs)
    common.add_argument("--max-terms", type=int, default=Limits.max_terms)
    common.add_argument("--prime-lo", type=int, default=PRIME_WINDOW[0],
                        help="lower end of the sampling window (exclusive)")
    common.add_argument("--prime-hi", type=int, default=PRIME_WINDOW[1],
                        help="upper end of the sampling window (exclusive)")
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    common.add_argument("--fixtures", metavar="DIR",
                        help=f"fixture directory (else ${cases.FIXTURE_ENV}, else bundled)")

    p = argparse.ArgumentParser(prog="groebnercheck",
                                description="Exact Groebner-basis checks on polynomial systems.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    s = add("gb", "reduced Groebner basis of a system file")
    s.add_argument("file")
    s = add("nf", "normal form of one entry modulo the others")
    s.add_argument("file")
    s.add_argument("-f", required=True, metavar="NAME")
    s = add("radical", "radical membership of one entry in the ideal of the others")
    s.add_argument("file")
    s.add_argument("-f", required=True, metavar="NAME")
    s = add("solve-zp", "all common zeros over Z_p by exhaustive evaluation")
    s.add_argument("file")
    s.add_argument("-p", "--prime", type=int, required=True)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum grid size")
    s = add("finiteness", "zero-dimensionality from leading terms")
    s.add_argument("file")
    s = add("dehom", "dehomogenize every entry to the x-variables")
    s.add_argument("file")
    s = add("conj", "conjugate every entry")
    s.add_argument("file")
    s = add("sample", "basis skeletons over sampled primes")
    s.add_argument("file")
    s.add_argument("-n", "--count", type=int, default=20)
    s = add("verify", "run a scripted verification case")
    s.add_argument("case", metavar="CASE_ID|all")
    return p


COMMANDS = {
    "gb": _cmd_gb, "nf": _cmd_nf, "radical": _cmd_radical, "solve-zp": _cmd_solve_zp,
    "finiteness": _cmd_finiteness, "dehom": _cmd_dehom, "conj": _cmd_conj,
    "sample": _cmd_sample, "verify": _cmd_verify,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        cfg = CliConfig.from_args(a)
        return COMMANDS[a.command](cfg, a)
    except IoError as exc:
        print(f"IoError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimit, CapExceeded) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GroebnerCheckError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
