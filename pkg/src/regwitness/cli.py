"""Command line entry point: ``regwitness <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import MAX_ENUM_N, enumerate_connected
from .families import FIXTURES, CompositionSpec, composition, fixture, generate
from .graph import Graph, GraphError, from_graph6, parse_edges, to_graph6
from .harness import SweepConfig, run_sweep
from .invariants import invariant_report
from .oracle import OracleBudgetExceeded, betti_table, format_betti, regularity
from .poly import DEFAULT_FIELD, BudgetExceeded, buchberger, build_gbei, check_field
from .theorems import THEOREM_IDS, VIOLATED, Context, append_violations, check, violation_record

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _prime(text: str) -> int:
    try:
        return check_field(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_graph_args(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_argument_group("graph input (exactly one)")
    g.add_argument("--edges", metavar="FILE", help="edge list, one 'u v' pair per line ('-' for stdin)")
    g.add_argument("--graph6", metavar="FILE", help="file holding one graph6 line, or a literal graph6 string")
    g.add_argument("--fixture", metavar="NAME", choices=sorted(FIXTURES), help="built-in graph")
    g.add_argument("--family", metavar="NAME[:a,b,..]", help="generated family, e.g. cycle:5 or composition:3,3")
    p.set_defaults(_graph_required=required)


def _load_graph(args) -> Graph | None:
    given = [k for k in ("edges", "graph6", "fixture", "family") if getattr(args, k, None)]
    if len(given) > 1:
        raise UsageError("give exactly one of --edges, --graph6, --fixture, --family")
    if not given:
        if args._graph_required:
            raise UsageError("a graph is required (--edges, --graph6, --fixture or --family)")
        return None
    kind = given[0]
    val = getattr(args, kind)
    if kind == "edges":
        text = sys.stdin.read() if val == "-" else Path(val).read_text()
        return parse_edges(text)
    if kind == "graph6":
        path = Path(val)
        data = path.read_text() if path.is_file() else val
        lines = [ln.strip() for ln in data.splitlines() if ln.strip() and not ln.startswith("#")]
        if len(lines) != 1:
            raise UsageError("--graph6 expects exactly one graph")
        return from_graph6(lines[0])
    if kind == "fixture":
        return fixture(val)
    name, _, params = val.partition(":")
    nums = _int_list(params) if params else []
    if name == "composition":
        return composition(nums)
    return generate(name, *nums)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_invariants(args) -> int:
    G = _load_graph(args)
    _emit(invariant_report(G, ms=tuple(args.m)))
    return EXIT_OK


def cmd_groebner(args) -> int:
    G = _load_graph(args)
    gb = buchberger(build_gbei(G, args.m, args.field), max_pairs=args.max_pairs)
    for line in gb.render():
        print(line)
    return EXIT_OK


def cmd_regularity(args) -> int:
    G = _load_graph(args)
    res = regularity(G, args.m, args.field, inequality_only=args.inequality_only, max_pairs=args.max_pairs)
    out = res.to_json()
    if args.betti:
        out["betti"] = format_betti(betti_table(G, args.m, args.field, max_pairs=args.max_pairs)).splitlines()
    _emit(out)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = CompositionSpec(tuple(args.composition)) if args.composition else None
    G = _load_graph(args)
    if G is None:
        if spec is None:
            raise UsageError("a graph is required (--edges, --graph6, --fixture, --family or --composition)")
        G = composition(spec)
    ctx = Context(
        G, args.m, args.field, inequality_only=args.inequality_only, force=args.force,
        composition=spec, oracle_kwargs={"max_pairs": args.max_pairs},
    )
    results = [check(G, args.m, t, ctx=ctx) for t in (args.theorem or THEOREM_IDS)]
    _emit([bc.to_json() for bc in results])
    bad = [violation_record(G, args.m, bc) for bc in results if bc.verdict == VIOLATED]
    if bad:
        append_violations(args.violations, bad)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.max_n is None and not args.graph6_file and not args.fixtures:
        raise UsageError("sweep needs --max-n, --graph6-file or --fixtures")
    try:
        cfg = SweepConfig(
            max_n=args.max_n,
            min_n=args.min_n,
            graph6_file=args.graph6_file,
            fixtures=tuple(args.fixtures.split(",")) if args.fixtures else (),
            ms=tuple(args.m),
            theorems=tuple(args.theorem or ()),
            field=args.field,
            compare_fields=tuple(args.compare_field or ()),
            max_pairs=args.max_pairs,
            timeout=args.timeout,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_sweep(cfg, args.violations)
    text = json.dumps(report.to_json(), indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
        _emit(report.summary | {"violations_file": str(args.violations), "out": args.out})
    else:
        print(text)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUM_N:
        raise UsageError(f"enumerate supports 1 <= N <= {MAX_ENUM_N}")
    for G in enumerate_connected(args.n):
        print(to_graph6(G).decode())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="regwitness",
        description="Invariants, Groebner bases and exact regularity of binomial edge ideals of small graphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, m_default=2):
        p.add_argument("--m", type=int, default=m_default, help="number of rows (default %(default)s)")
        p.add_argument("--field", type=_prime, default=DEFAULT_FIELD, help="prime characteristic (default %(default)s)")
        p.add_argument("--max-pairs", type=int, default=500_000, help="S-pair budget")

    p = sub.add_parser("invariants", help="combinatorial invariants as JSON")
    _add_graph_args(p)
    p.add_argument("--m", type=_int_list, default=[2, 3], help="m values for gamma (default 2,3)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("groebner", help="reduced lex Groebner basis, one polynomial per line")
    _add_graph_args(p)
    common(p)
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("regularity", help="regularity of S/J via the initial ideal")
    _add_graph_args(p)
    common(p)
    p.add_argument("--inequality-only", action="store_true", help="report an upper bound only")
    p.add_argument("--betti", action="store_true", help="also print the graded Betti table of S/in(J)")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("check", help="check theorems on one graph")
    _add_graph_args(p, required=False)
    common(p)
    p.add_argument("--theorem", action="append", choices=THEOREM_IDS, metavar="ID", help="repeatable; default all")
    p.add_argument("--force", action="store_true", help="assert class membership the recognizers cannot confirm")
    p.add_argument("--inequality-only", action="store_true")
    p.add_argument("--composition", type=_int_list, metavar="M1,M2,..", help="check the composition of F graphs")
    p.add_argument("--violations", default="violations.jsonl", help="JSON-lines file to append counterexamples to")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run theorems over a corpus")
    p.add_argument("--max-n", type=int, help=f"enumerate connected graphs up to N <= {MAX_ENUM_N} vertices")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--graph6-file", metavar="FILE", help="one graph6 string per line")
    p.add_argument("--fixtures", metavar="A,B,..", help="comma-separated fixture names")
    p.add_argument("--m", type=_int_list, default=[2], help="comma-separated m values (default 2)")
    p.add_argument("--theorem", action="append", choices=THEOREM_IDS, metavar="ID")
    p.add_argument("--field", type=_prime, default=DEFAULT_FIELD)
    p.add_argument("--compare-field", type=_prime, action="append", metavar="P",
                   help="re-run the oracle in characteristic P and report discrepancies")
    p.add_argument("--max-pairs", type=int, default=500_000)
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per (graph, m); 0 disables")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the full JSON report here")
    p.add_argument("--violations", default="violations.jsonl")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", help="graph6 lines of all connected graphs on N vertices")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BudgetExceeded, OracleBudgetExceeded) as exc:
        print(f"regwitness: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError, ValueError, KeyError) as exc:
        print(f"regwitness: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"regwitness: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
