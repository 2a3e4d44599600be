"""Command-line entry point: ``cyclicggm <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a
resource bound (size cap or ``--max-seconds``) stopped the run.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys

from cyclicggm import binomials, ideal, msafts, verify
from cyclicggm.secants import NGon, SecantSet

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

METHODS = ("bruteforce", "walks", "lgv", "closed", "all")


class UsageError(Exception):
    pass


class Deadline(Exception):
    pass


def _fmt_secant(u, v, one_indexed):
    k = 1 if one_indexed else 0
    return f"{{{u + k},{v + k}}}"


def _fmt_set(s: SecantSet, one_indexed: bool) -> str:
    return " ".join(_fmt_secant(t.u, t.v, one_indexed) for t in s)


def msafts_document(g: NGon, sets: list) -> dict:
    """JSON document for a list of Msafts: count, dihedral class count, pairs."""
    classes = msafts.dihedral_classes(g, sets)
    return {
        "n": g.n,
        "count": len(sets),
        "class_count": len(classes),
        "msafts": [s.pairs() for s in sets],
    }


def dump_json(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def msafts_dot(g: NGon, sets: list, one_indexed: bool = False) -> str:
    k = 1 if one_indexed else 0
    lines = []
    for idx, s in enumerate(sets):
        lines.append(f"graph msaft_{idx} {{")
        lines.append(f"  layout=circo; node [shape=circle];")
        for v in range(g.n):
            lines.append(f"  {v + k};")
        for t in s:
            lines.append(f"  {t.u + k} -- {t.v + k};")
        lines.append("}")
    return "\n".join(lines) + "\n"


def _bound(n, cap, force, what):
    if n > cap and not force:
        raise msafts.EnumerationBoundError(f"{what} is capped at n={cap} (use --force)")


def _enumerate(g: NGon, method: str, force: bool) -> list:
    if method == "bruteforce":
        cap = g.n if force else msafts.BRUTEFORCE_MAX_N
        return msafts.enumerate_msafts_bruteforce(g, max_n=cap)
    if method == "walks":
        _bound(g.n, verify.WALKS_MAX_N, force, "walk enumeration")
        return msafts.enumerate_msafts_via_walks(g)
    raise UsageError(f"enumeration method must be bruteforce or walks, not {method!r}")


def cmd_count(args, out):
    g = NGon(args.n)
    methods = ("bruteforce", "walks", "lgv", "closed") if args.method == "all" else (args.method,)
    cap = 10 ** 9 if args.force else None
    counts = verify.msaft_counts(g, methods,
                                 bruteforce_max_n=cap or msafts.BRUTEFORCE_MAX_N,
                                 walks_max_n=cap or verify.WALKS_MAX_N)
    if not counts:
        raise msafts.EnumerationBoundError(f"{args.method} is capped below n={g.n} (use --force)")
    if args.format == "json":
        out.write(dump_json({"n": g.n, "counts": counts}))
    else:
        for k in methods:
            out.write(f"{k}: {counts[k]}\n" if k in counts else f"{k}: skipped (size bound)\n")
        if g.n == 3 and "lgv" in counts:
            out.write("note: the LGV sum is evaluated at n=3 outside its stated range n>=4\n")
    return EXIT_OK if len(set(counts.values())) <= 1 else EXIT_FAIL


def cmd_enumerate(args, out):
    g = NGon(args.n)
    method = "walks" if args.method in ("all", "lgv", "closed") else args.method
    sets = _enumerate(g, method, args.force)
    if args.format == "json":
        out.write(dump_json(msafts_document(g, sets)))
    elif args.format == "dot":
        out.write(msafts_dot(g, sets, args.one_indexed))
    else:
        for s in sets:
            out.write(_fmt_set(s, args.one_indexed) + "\n")
        out.write(f"# {len(sets)} Msafts\n")
    return EXIT_OK


def cmd_export(args, out):
    if args.format == "text":
        args.format = "json"
    return cmd_enumerate(args, out)


def cmd_triples(args, out):
    g = NGon(args.n)
    triples = msafts.enumerate_forbidden_triples(g)
    if args.format == "json":
        out.write(dump_json({"n": g.n, "count": len(triples),
                             "triples": [[[s.u, s.v] for s in t] for t in triples]}))
    else:
        for t in triples:
            out.write(" ".join(_fmt_secant(s.u, s.v, args.one_indexed) for s in t) + "\n")
        out.write(f"# {len(triples)} forbidden triples\n")
    return EXIT_OK


def _terms_json(order, poly):
    return [[str(c), [[s.u, s.v] for s in order.factors(m)]] for m, c in poly.sorted_terms()]


def cmd_minors(args, out):
    g = NGon(args.n)
    gens = ideal.generate_st_minors(g)
    if args.format == "json":
        out.write(dump_json({
            "n": g.n, "count": len(gens),
            "minors": [{"interval": list(m.interval), "rows": list(m.rows), "cols": list(m.cols),
                        "terms": _terms_json(gens.order, m.poly)} for m in gens]}))
    else:
        k = 1 if args.one_indexed else 0
        for m in gens:
            rows = ",".join(str(r + k) for r in m.rows)
            cols = ",".join(str(c + k) for c in m.cols)
            out.write(f"rows {rows} cols {cols}: {m.poly.format(args.one_indexed)}\n")
        out.write(f"# {len(gens)} generators\n")
    return EXIT_OK


def cmd_leading(args, out):
    g = NGon(args.n)
    order = ideal.term_order(g)
    supports = ideal.leading_supports(g)
    triples = {SecantSet.of(g, t) for t in msafts.enumerate_forbidden_triples(g)}
    ok = supports == triples
    ordered = sorted(supports, key=SecantSet.sort_key)
    if args.format == "json":
        out.write(dump_json({"n": g.n, "count": len(ordered), "equals_forbidden_triples": ok,
                             "leading": [s.pairs() for s in ordered]}))
    else:
        for s in ordered:
            out.write(order.format_monomial(order.monomial(s), args.one_indexed) + "\n")
        out.write(f"# {len(ordered)} leading monomials; "
                  f"{'equal to' if ok else 'DIFFERENT FROM'} the forbidden triples\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_groebner(args, out):
    g = NGon(args.n)
    cap = max(g.n, ideal.GROEBNER_MAX_N) if args.force else ideal.GROEBNER_MAX_N
    report = ideal.s_pair_check(g, not args.no_coprime, max_n=cap, max_seconds=args.max_seconds)
    if args.format == "json":
        out.write(dump_json({
            "n": report.n, "generators": report.num_generators, "pairs": report.pairs_total,
            "skipped": report.pairs_skipped, "reduced": report.pairs_reduced,
            "nonzero": len(report.nonzero), "aborted": report.aborted, "passed": report.passed}))
    else:
        out.write(report.summary() + "\n")
        for i, j, r in report.nonzero[:10]:
            out.write(f"  pair ({i},{j}) remainder {r.format(args.one_indexed)}\n")
    if report.aborted:
        return EXIT_BOUND
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_identities(args, out):
    failures = []
    for n in range(1, args.max_n + 1):
        for ident in binomials.IdentityId:
            check = binomials.verify_identity(ident, n)
            if not check.equal:
                failures.append(check)
                out.write(f"FAIL {ident.value} n={n}: {check.lhs} != {check.rhs}\n")
    out.write(f"{len(binomials.IdentityId)} identities checked for n=1..{args.max_n}: "
              f"{'all pass' if not failures else f'{len(failures)} failures'}\n")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_verify_all(args, out):
    cap = max(args.n, ideal.GROEBNER_MAX_N) if args.force else ideal.GROEBNER_MAX_N
    checks = verify.verify_all(args.n, groebner_max_n=cap, max_seconds=args.max_seconds)
    for c in checks:
        out.write(c.line() + "\n")
    if any(c.ok is False for c in checks):
        return EXIT_FAIL
    if any(c.ok is None and "ABORTED" in c.detail for c in checks):
        return EXIT_BOUND
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "triples": cmd_triples,
    "minors": cmd_minors,
    "leading": cmd_leading,
    "groebner-check": cmd_groebner,
    "identities": cmd_identities,
    "verify-all": cmd_verify_all,
    "export": cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=5, help="number of polygon vertices (>= 3)")
    common.add_argument("--method", choices=METHODS, default="all")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--one-indexed", action="store_true", help="print vertices as 1..n")
    common.add_argument("--max-seconds", type=float, default=None)
    common.add_argument("--force", action="store_true", help="lift the default size caps")

    parser = argparse.ArgumentParser(prog="cyclicggm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "identities":
            p.add_argument("--max-n", type=int, default=300)
        if name == "groebner-check":
            p.add_argument("--no-coprime", action="store_true",
                           help="reduce every pair, including coprime leading monomials")
    return parser


def _on_alarm(signum, frame):
    raise Deadline()


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    timer = args.max_seconds is not None and args.command != "groebner-check" and hasattr(signal, "SIGALRM")
    if timer:
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.setitimer(signal.ITIMER_REAL, args.max_seconds)
    try:
        if args.n < 3:
            raise UsageError(f"--n must be at least 3, got {args.n}")
        if args.command == "identities" and args.max_n < 1:
            raise UsageError("--max-n must be at least 1")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (msafts.EnumerationBoundError, Deadline) as exc:
        err.write(f"resource bound: {exc or 'time limit reached'}\n")
        return EXIT_BOUND
    except msafts.WalkError as exc:
        err.write(f"verification failure: {exc}\n")
        return EXIT_FAIL
    finally:
        if timer:
            signal.setitimer(signal.ITIMER_REAL, 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
