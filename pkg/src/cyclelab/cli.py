"""Command-line entry point: ``cyclelab {analyze,check,scan,identities,catalog}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from .cycles import DEFAULT_CYCLE_LIMIT, BudgetExceeded, EnumerationLimitError, analyze
from .graph import Graph, from_graph6, named_graph, read_graph6_lines, to_graph6
from .search import FileSource, GeneratorSource, ListSource, ScanJob, find_tight, scan
from .statements import (
    SCHEMA_VERSION,
    Quantifier,
    Status,
    Verdict,
    catalog,
    evaluate_all,
    select,
    sweep_identities,
)

CLI_SCHEMA = "cyclelab.cli.v1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROVED_VIOLATION = 2
EXIT_IO = 3
EXIT_SKIPPED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="FILE", help="graph6 file, one graph per line")
    p.add_argument("--graph6", metavar="STR", help="a single graph6 string")
    p.add_argument("--named", metavar="NAME[,ARGS]", help="e.g. petersen, complete,5, complete_bipartite,3,4")


def _add_selection(p: argparse.ArgumentParser, default_statements: str) -> None:
    p.add_argument("--statements", default=default_statements, help="all|proved|open|theorems|classical or ids (T1,C7-C10,...)")
    p.add_argument("--lambda", dest="lambdas", default="all", help="N[,N...] or all")
    p.add_argument("--mode", choices=["forall", "exists"], default="forall")
    p.add_argument("--allow-outside-domain", action="store_true", help="accept lambda > delta")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="invariants and longest-cycle analysis")
    _add_input(p)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--cycle-limit", type=int, default=DEFAULT_CYCLE_LIMIT)

    p = sub.add_parser("check", help="evaluate statements on given graphs")
    _add_input(p)
    _add_selection(p, "all")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--cycle-limit", type=int, default=DEFAULT_CYCLE_LIMIT)

    p = sub.add_parser("scan", help="evaluate statements over a graph family")
    _add_input(p)
    p.add_argument("--n", type=int, help="generate graphs of exactly this order")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    p.add_argument("--no-dedup", action="store_true", help="labelled graphs, no isomorphism reduction")
    p.add_argument("--min-degree", type=int, default=0)
    _add_selection(p, "all")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--output", metavar="FILE", help="also write the JSON-lines report here")
    p.add_argument("--tight-only", action="store_true", help="report only zero-slack rows")
    p.add_argument("--workers", type=int, default=None, help="default: $CYCLELAB_WORKERS or 1")
    p.add_argument("--budget-ms", type=int, default=5000)
    p.add_argument("--cycle-limit", type=int, default=DEFAULT_CYCLE_LIMIT)

    p = sub.add_parser("identities", help="sweep the two substitution identities")
    p.add_argument("--delta-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--format", choices=["json", "table"], default="table")

    p = sub.add_parser("catalog", help="dump the statement table")
    p.add_argument("--format", choices=["json", "table"], default="json")
    return parser


# helpers ------------------------------------------------------------------


def _graphs_from(args) -> list[Graph]:
    given = [x for x in (args.input, args.graph6, args.named) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --input, --graph6, --named")
    if args.named is not None:
        try:
            return [named_graph(args.named)]
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
    if args.graph6 is not None:
        try:
            return [from_graph6(args.graph6)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    with open(args.input, encoding="ascii") as fh:
        try:
            return list(read_graph6_lines(fh))
        except ValueError as exc:
            raise OSError(f"{args.input}: {exc}") from None


def _statements(selector: str):
    try:
        chosen = select(selector)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not chosen:
        raise UsageError(f"no statements match {selector!r}")
    return chosen


def _lambdas(selector: str) -> list[int] | None:
    if selector.strip().lower() == "all":
        return None
    try:
        values = [int(x) for x in selector.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --lambda value {selector!r}") from None
    if not values or any(v < 1 for v in values):
        raise UsageError("lambda values must be positive integers")
    return values


def _mode(name: str) -> Quantifier:
    return Quantifier.FORALL_LONGEST if name == "forall" else Quantifier.EXISTS_LONGEST


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _fmt_sigma(sigma: dict) -> str:
    return " ".join(f"s{k}={v}" for k, v in sigma.items())


# subcommands --------------------------------------------------------------


def _cmd_analyze(args, out: TextIO) -> int:
    graphs = _graphs_from(args)
    records = []
    for g in graphs:
        bundle, analysis = analyze(g, args.cycle_limit)
        records.append(
            {
                "graph6": to_graph6(g),
                "invariants": bundle.to_dict(),
                "cycles": analysis.to_dict(max_lambda=max(bundle.min_degree, 1)),
            }
        )
    if args.format == "json":
        _dump({"schema": CLI_SCHEMA, "command": "analyze", "graphs": records}, out)
        return EXIT_OK
    for rec in records:
        inv, cyc = rec["invariants"], rec["cycles"]
        profiles = sorted({(x["p_bar"], x["c_bar"]) for x in cyc["longest_cycles"]})
        out.write(f"graph6 {rec['graph6']}\n")
        out.write(
            f"  n={inv['n']} delta={inv['min_degree']} kappa={inv['connectivity']} "
            f"alpha={inv['independence_number']} c={cyc['circumference']}\n"
        )
        out.write(f"  sigma: {_fmt_sigma(inv['sigma'])}\n")
        out.write(f"  degrees: {' '.join(map(str, inv['degree_sequence']))}\n")
        out.write(f"  longest cycles: {cyc['longest_cycle_count']}\n")
        out.write(f"  residual profiles (p_bar, c_bar): {' '.join(f'({p},{q})' for p, q in profiles)}\n")
        for lam, counts in cyc.get("classification", {}).items():
            out.write(
                f"  lambda={lam}: D={counts['D']} PD={counts['PD']} CD={counts['CD']} "
                f"of {cyc['longest_cycle_count']}\n"
            )
    return EXIT_OK


def _cmd_check(args, out: TextIO) -> int:
    graphs = _graphs_from(args)
    statements = _statements(args.statements)
    lambdas = _lambdas(args.lambdas)
    mode = _mode(args.mode)
    records = []
    proved_violation = False
    for g in graphs:
        bundle, analysis = analyze(g, args.cycle_limit)
        try:
            results = evaluate_all(bundle, analysis, statements, mode, lambdas, args.allow_outside_domain)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        status = {s.id: s.status for s in statements}
        for r in results:
            if r.verdict is Verdict.VIOLATED and status[r.statement_id] is Status.PROVED:
                proved_violation = True
        records.append({"graph6": to_graph6(g), "results": [r.to_dict() for r in results]})
    if args.format == "json":
        _dump({"schema": CLI_SCHEMA, "command": "check", "graphs": records}, out)
    else:
        for rec in records:
            out.write(f"graph6 {rec['graph6']}\n")
            out.write(f"  {'statement':<10}{'lambda':>7}  {'verdict':<10}{'hyp':>5}{'concl':>7}  witness\n")
            for r in rec["results"]:
                concl = "-" if r["conclusion_margin"] is None else str(r["conclusion_margin"])
                witness = "-" if r["witness"] is None else " ".join(map(str, r["witness"]))
                extra = f" ({r['vacuity_reason']})" if r["vacuity_reason"] else ""
                mark = " tight" if r["tight"] else ""
                out.write(
                    f"  {r['statement']:<10}{r['lambda']:>7}  {r['verdict']:<10}"
                    f"{r['hypothesis_margin']:>5}{concl:>7}  {witness}{extra}{mark}\n"
                )
    return EXIT_PROVED_VIOLATION if proved_violation else EXIT_OK


def _cmd_scan(args, out: TextIO) -> int:
    statements = _statements(args.statements)
    lambdas = _lambdas(args.lambdas)
    explicit = [x for x in (args.input, args.graph6, args.named) if x is not None]
    generator = any(x is not None for x in (args.n, args.n_min, args.n_max))
    if len(explicit) + generator != 1:
        raise UsageError("give exactly one of --input, --graph6, --named or generator orders")
    if args.input is not None:
        source = FileSource(args.input)
    elif explicit:
        graphs = _graphs_from(args)
        source = ListSource(tuple(to_graph6(g) for g in graphs), args.graph6 or args.named)
    else:
        if args.n is not None:
            n_min = n_max = args.n
        else:
            n_min = args.n_min if args.n_min is not None else 1
            n_max = args.n_max if args.n_max is not None else n_min
        if not 1 <= n_min <= n_max <= 13:
            raise UsageError("generated orders must satisfy 1 <= n-min <= n-max <= 13")
        source = GeneratorSource(n_min, n_max, not args.all_graphs, not args.no_dedup, args.min_degree)
    workers = args.workers
    if workers is None:
        try:
            workers = int(os.environ.get("CYCLELAB_WORKERS", "1"))
        except ValueError:
            raise UsageError("CYCLELAB_WORKERS must be an integer") from None
    try:
        job = ScanJob(
            source=source,
            statements=tuple(s.id for s in statements),
            lambdas=tuple(lambdas) if lambdas is not None else None,
            mode=_mode(args.mode),
            budget_ms=args.budget_ms,
            cycle_limit=args.cycle_limit,
            workers=workers,
            allow_outside_domain=args.allow_outside_domain,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        report = find_tight(job) if args.tight_only else scan(job)
    except ValueError as exc:
        raise OSError(f"unreadable graph source: {exc}") from None
    text = report.to_json_lines()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    out.write(text if args.format == "json" else report.to_table())
    return report.exit_code()


def _cmd_identities(args, out: TextIO) -> int:
    if args.delta_max < 1 or args.n_max < 1:
        raise UsageError("--delta-max and --n-max must be positive")
    result = sweep_identities(args.n_max, args.delta_max)
    if args.format == "json":
        _dump({"schema": CLI_SCHEMA, "command": "identities", "delta_max": args.delta_max,
               "n_max": args.n_max, **result}, out)
    else:
        out.write(f"degree-threshold substitution: {result['threshold_cases']} cases\n")
        out.write(f"circumference-bound substitution: {result['bound_cases']} cases\n")
        if result["failures"]:
            for f in result["failures"]:
                out.write(f"FAILED: {json.dumps(f, sort_keys=True)}\n")
        else:
            out.write("all equivalences hold\n")
    return EXIT_OK if not result["failures"] else EXIT_PROVED_VIOLATION


def _cmd_catalog(args, out: TextIO) -> int:
    entries = [s.to_dict() for s in catalog()]
    if args.format == "json":
        _dump({"schema": SCHEMA_VERSION, "statements": entries}, out)
    else:
        for e in entries:
            out.write(f"{e['id']:<6}{e['status']:<8}{e['lambda_domain']:<22}"
                      f"{e['hypothesis']}  =>  {e['conclusion']}\n")
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "identities": _cmd_identities,
    "catalog": _cmd_catalog,
}


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"cyclelab: usage error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"cyclelab: I/O error: {exc}\n")
        return EXIT_IO
    except (BudgetExceeded, EnumerationLimitError) as exc:
        err.write(f"cyclelab: {exc}\n")
        return EXIT_SKIPPED


def main() -> None:
    sys.exit(run())
