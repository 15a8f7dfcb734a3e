"""Exhaustive small-graph generation and statement scanning."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .canon import canonical_labelling
from .cycles import DEFAULT_CYCLE_LIMIT, BudgetExceeded, EnumerationLimitError, analyze
from .graph import Graph, from_graph6, is_connected, relabel, to_graph6
from .statements import (
    Quantifier,
    Statement,
    Status,
    Verdict,
    evaluate_all,
    lookup,
)

MAX_GENERATED_ORDER = 13
REPORT_SCHEMA = "cyclelab.scan.v1"


# generation ---------------------------------------------------------------


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_GENERATED_ORDER:
        raise ValueError(f"generation supports 1 <= n <= {MAX_GENERATED_ORDER}, got {n}")


@lru_cache(maxsize=None)
def _classes(n: int, connected: bool) -> tuple[tuple[int, ...], ...]:
    """Canonical adjacency tuples, one per isomorphism class, sorted by certificate.

    Classes on n vertices come from classes on n-1 vertices plus one new
    vertex joined to every possible neighbour subset. For connected graphs it
    suffices to extend connected graphs, since every connected graph has a
    vertex whose removal keeps it connected.
    """
    if n == 1:
        return ((0,),)
    parents = _classes(n - 1, connected)
    first = 1 if connected else 0
    found: dict[int, tuple[int, ...]] = {}
    new = n - 1
    for adj in parents:
        for nbrs in range(first, 1 << new):
            rows = [row | (nbrs >> v & 1) << new for v, row in enumerate(adj)]
            rows.append(nbrs)
            g = Graph._trusted(n, tuple(rows))
            cert, order = canonical_labelling(g)
            if cert not in found:
                found[cert] = relabel(g, order).adj
    return tuple(found[c] for c in sorted(found))


def _labelled(n: int, connected: bool) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph._trusted(n, tuple(adj))
        if not connected or is_connected(g):
            yield g


def generate_graphs(
    n: int,
    connected: bool = True,
    dedup: bool = True,
    min_degree: int = 0,
) -> Iterator[Graph]:
    """All graphs on ``n`` vertices, optionally connected-only and one per isomorphism class.

    The deduplicated stream is practical up to about n = 9 in pure Python;
    the labelled stream up to about n = 7.
    """
    _check_order(n)
    if dedup:
        source: Iterable[Graph] = (Graph._trusted(n, adj) for adj in _classes(n, connected))
    else:
        source = _labelled(n, connected)
    for g in source:
        if min_degree <= 0 or min(g.degrees()) >= min_degree:
            yield g


# scan jobs ----------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSource:
    n_min: int
    n_max: int
    connected: bool = True
    dedup: bool = True
    min_degree: int = 0

    def describe(self) -> dict:
        return {
            "kind": "generator",
            "n_min": self.n_min,
            "n_max": self.n_max,
            "connected": self.connected,
            "dedup": self.dedup,
            "min_degree": self.min_degree,
        }

    def graph6_lines(self) -> list[str]:
        if self.n_min > self.n_max:
            raise ValueError("n_min exceeds n_max")
        return [
            to_graph6(g)
            for n in range(self.n_min, self.n_max + 1)
            for g in generate_graphs(n, self.connected, self.dedup, self.min_degree)
        ]


@dataclass(frozen=True)
class FileSource:
    path: str

    def describe(self) -> dict:
        return {"kind": "graph6-file", "path": self.path}

    def graph6_lines(self) -> list[str]:
        text = Path(self.path).read_text(encoding="ascii")
        lines = [line.strip() for line in text.splitlines()]
        return [line for line in lines if line]


@dataclass(frozen=True)
class ListSource:
    """In-memory graphs, e.g. a single named graph."""

    graphs: tuple[str, ...]
    label: str = "inline"

    def describe(self) -> dict:
        return {"kind": "inline", "label": self.label, "count": len(self.graphs)}

    def graph6_lines(self) -> list[str]:
        return list(self.graphs)


@dataclass(frozen=True)
class ScanJob:
    source: GeneratorSource | FileSource | ListSource
    statements: tuple[str, ...]
    lambdas: Optional[tuple[int, ...]] = None
    mode: Quantifier = Quantifier.FORALL_LONGEST
    budget_ms: int = 5000
    cycle_limit: int = DEFAULT_CYCLE_LIMIT
    workers: int = 1
    allow_outside_domain: bool = False

    def __post_init__(self):
        if self.budget_ms <= 0:
            raise ValueError("budget_ms must be positive")
        if self.cycle_limit <= 0:
            raise ValueError("cycle_limit must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        for sid in self.statements:
            lookup(sid)

    def describe(self) -> dict:
        # worker count is deliberately absent: reports must not depend on it
        return {
            "source": self.source.describe(),
            "statements": list(self.statements),
            "lambdas": list(self.lambdas) if self.lambdas is not None else "all",
            "mode": self.mode.value,
            "budget_ms": self.budget_ms,
            "cycle_limit": self.cycle_limit,
            "allow_outside_domain": self.allow_outside_domain,
        }


@dataclass
class ScanReport:
    job: dict
    graphs_total: int = 0
    graphs_evaluated: int = 0
    totals: dict[str, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    tight_instances: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def proved_violations(self) -> list[dict]:
        return [c for c in self.counterexamples if c["status"] == Status.PROVED.value]

    @property
    def open_violations(self) -> list[dict]:
        return [c for c in self.counterexamples if c["status"] == Status.OPEN.value]

    def exit_code(self) -> int:
        if self.proved_violations:
            return 2
        if self.skipped:
            return 4
        return 0

    def summary(self) -> dict:
        per_statement = {}
        for sid, counts in self.totals.items():
            total = sum(counts.values())
            non_vacuous = total - counts.get(Verdict.VACUOUS.value, 0)
            per_statement[sid] = {
                **{v.value: counts.get(v.value, 0) for v in Verdict},
                "tight": sum(1 for t in self.tight_instances if t["statement"] == sid),
                "non_vacuous_fraction": f"{non_vacuous}/{total}",
            }
        return {
            "graphs_total": self.graphs_total,
            "graphs_evaluated": self.graphs_evaluated,
            "skipped": len(self.skipped),
            "proved_violations": len(self.proved_violations),
            "open_violations": len(self.open_violations),
            "statements": per_statement,
        }

    def to_json_lines(self) -> str:
        """Header, one line per non-vacuous row, then counterexamples, skips and the summary."""
        out = [json.dumps({"schema": REPORT_SCHEMA, "job": self.job}, sort_keys=True)]
        out.extend(json.dumps({"row": r}, sort_keys=True) for r in self.rows)
        out.extend(json.dumps({"counterexample": c}, sort_keys=True) for c in self.counterexamples)
        out.extend(json.dumps({"skipped": s}, sort_keys=True) for s in self.skipped)
        out.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(out) + "\n"

    def to_table(self) -> str:
        summary = self.summary()
        header = f"{'statement':<10}{'VACUOUS':>10}{'CONFIRMED':>11}{'VIOLATED':>10}{'tight':>8}  non-vacuous"
        lines = [
            f"graphs: {summary['graphs_evaluated']}/{summary['graphs_total']} evaluated, "
            f"{summary['skipped']} skipped",
            header,
            "-" * len(header),
        ]
        for sid, s in summary["statements"].items():
            lines.append(
                f"{sid:<10}{s['VACUOUS']:>10}{s['CONFIRMED']:>11}{s['VIOLATED']:>10}"
                f"{s['tight']:>8}  {s['non_vacuous_fraction']}"
            )
        for c in self.counterexamples:
            tag = "PROVED-VIOLATION" if c["status"] == Status.PROVED.value else "OPEN-VIOLATION"
            lines.append(
                f"{tag}: {c['statement']} lambda={c['lambda']} graph6={c['graph6']} "
                f"witness={c['witness']}"
            )
        for s in self.skipped:
            lines.append(f"SKIPPED: {s['graph6']} ({s['reason']})")
        return "\n".join(lines) + "\n"


def _scan_one(args: tuple) -> tuple:
    """Worker: evaluate one graph; returns (index, graph6, results-or-None, skip reason, invariants)."""
    index, line, statement_ids, lambdas, mode, budget_ms, cycle_limit, outside = args
    g = from_graph6(line)
    deadline = time.monotonic() + budget_ms / 1000
    try:
        bundle, analysis = analyze(g, cycle_limit, deadline)
        if time.monotonic() > deadline:
            raise BudgetExceeded("per-graph time budget exhausted")
    except (BudgetExceeded, EnumerationLimitError) as exc:
        return index, line, None, str(exc), None
    statements = [lookup(sid) for sid in statement_ids]
    results = evaluate_all(
        bundle, analysis, statements, mode,
        list(lambdas) if lambdas is not None else None, outside,
    )
    invariants = {
        "n": bundle.n,
        "delta": bundle.min_degree,
        "kappa": bundle.connectivity,
        "alpha": bundle.independence_number,
        "sigma": {str(k): v for k, v in bundle.sigma.items()},
        "c": analysis.circumference,
    }
    return index, line, [r.to_dict() for r in results], None, invariants


def scan(
    job: ScanJob,
    keep_rows: bool = True,
    row_filter: Callable[[dict], bool] | None = None,
) -> ScanReport:
    """Evaluate every graph of the job's source against its statements.

    Rows (non-vacuous results) come back in source order whatever the worker
    count, so reports are byte-identical across runs.
    """
    lines = job.source.graph6_lines()
    for k, line in enumerate(lines):
        try:
            from_graph6(line)
        except ValueError as exc:
            raise ValueError(f"graph {k}: {exc}") from None
    status = {sid: lookup(sid).status.value for sid in job.statements}
    report = ScanReport(job=job.describe(), graphs_total=len(lines))
    report.totals = {sid: {v.value: 0 for v in Verdict} for sid in job.statements}
    tasks = [
        (k, line, job.statements, job.lambdas, job.mode, job.budget_ms, job.cycle_limit,
         job.allow_outside_domain)
        for k, line in enumerate(lines)
    ]
    if job.workers == 1 or len(tasks) < 2:
        outcomes: Iterable[tuple] = map(_scan_one, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=job.workers)
        chunk = max(1, min(64, len(tasks) // (job.workers * 8)))
        outcomes = pool.map(_scan_one, tasks, chunksize=chunk)
    try:
        for index, line, results, reason, invariants in outcomes:
            if results is None:
                report.skipped.append({"index": index, "graph6": line, "reason": reason})
                continue
            report.graphs_evaluated += 1
            for r in results:
                report.totals[r["statement"]][r["verdict"]] += 1
                if r["verdict"] == Verdict.VACUOUS.value:
                    continue
                row = {"index": index, "graph6": line, "status": status[r["statement"]], **r}
                if r["verdict"] == Verdict.VIOLATED.value:
                    report.counterexamples.append({**row, "invariants": invariants})
                if r["tight"]:
                    report.tight_instances.append(row)
                if keep_rows and (row_filter is None or row_filter(row)):
                    report.rows.append(row)
    finally:
        if pool is not None:
            pool.shutdown()
    return report


def find_tight(job: ScanJob) -> ScanReport:
    """Like scan, but keep only rows whose conclusion holds with zero slack."""
    return scan(job, row_filter=lambda row: row["tight"])


def statements_for(ids: Iterable[str]) -> tuple[str, ...]:
    return tuple(s.id if isinstance(s, Statement) else lookup(s).id for s in ids)
