"""Corpus sweeps: run the theorem registry over many graphs and collect a report."""

from __future__ import annotations

import json
import os
import signal
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .enumeration import MAX_ENUM_N, enumerate_connected
from .families import FIXTURES, fixture
from .graph import Graph, GraphError, from_graph6, to_graph6
from .oracle import MAX_SUPPORT
from .poly import DEFAULT_FIELD, DEFAULT_MAX_PAIRS, check_field
from .theorems import BUDGET, HOLDS, SKIPPED, THEOREM_IDS, VIOLATED, Context, check, violation_record


class WallClockExceeded(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    max_n: int | None = None  # enumerate connected graphs on min_n..max_n vertices
    min_n: int = 1
    graph6_file: str | None = None
    fixtures: tuple[str, ...] = ()
    ms: tuple[int, ...] = (2,)
    theorems: tuple[str, ...] = ()  # empty means all
    field: int = DEFAULT_FIELD
    compare_fields: tuple[int, ...] = ()  # extra characteristics to re-run the oracle in
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_support: int = MAX_SUPPORT
    timeout: float = 60.0  # seconds per (graph, m); 0 disables
    workers: int = 1

    def __post_init__(self):
        if self.max_n is None and not self.graph6_file and not self.fixtures:
            raise ValueError("sweep needs a corpus: max_n, graph6_file or fixtures")
        if self.max_n is not None and not 1 <= self.min_n <= self.max_n <= MAX_ENUM_N:
            raise ValueError(f"enumeration range must satisfy 1 <= min_n <= max_n <= {MAX_ENUM_N}")
        if any(m < 2 for m in self.ms) or not self.ms:
            raise ValueError("m values must be >= 2")
        for t in self.theorems:
            if t not in THEOREM_IDS:
                raise ValueError(f"unknown theorem {t!r}")
        for name in self.fixtures:
            if name not in FIXTURES:
                raise ValueError(f"unknown fixture {name!r}")
        check_field(self.field)
        for p in self.compare_fields:
            check_field(p)
        if self.max_pairs <= 0 or self.max_support <= 0 or self.timeout < 0 or self.workers < 1:
            raise ValueError("budgets and worker count must be positive")


def corpus(cfg: SweepConfig) -> list[tuple[str, Graph]]:
    items: list[tuple[str, Graph]] = []
    if cfg.max_n is not None:
        for n in range(cfg.min_n, cfg.max_n + 1):
            items += [(to_graph6(G).decode(), G) for G in enumerate_connected(n)]
    if cfg.graph6_file:
        for lineno, line in enumerate(Path(cfg.graph6_file).read_text().splitlines(), 1):
            line = line.strip()
            if line and not line.startswith("#"):
                try:
                    items.append((line, from_graph6(line)))
                except GraphError as exc:
                    raise GraphError(f"{cfg.graph6_file}:{lineno}: {exc}") from None
    for name in cfg.fixtures:
        items.append((name, fixture(name)))
    return items


def _alarm(signum, frame):
    raise WallClockExceeded()


def _run_one(args) -> dict:
    name, g6, m, cfg = args
    G = from_graph6(g6)
    if name in FIXTURES:
        G = fixture(name)
    ctx = Context(G, m, cfg.field, oracle_kwargs={"max_pairs": cfg.max_pairs, "max_support": cfg.max_support})
    ids = cfg.theorems or THEOREM_IDS
    use_alarm = cfg.timeout > 0 and hasattr(signal, "setitimer")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, cfg.timeout)
    start = time.perf_counter()
    row: dict = {"graph": name, "graph6": g6, "n": G.n, "e": G.num_edges, "m": m}
    try:
        checks = [check(G, m, t, ctx=ctx) for t in ids]
        res = ctx.oracle()
        row["reg"] = res.reg if res else None
        row["exact"] = res.exact if res else None
        row["n_minus_c"] = ctx.n - ctx.c
        if res and cfg.compare_fields:
            from .oracle import regularity

            row["other_fields"] = {
                str(p): regularity(G, m, p, max_pairs=cfg.max_pairs, max_support=cfg.max_support).reg
                for p in cfg.compare_fields
            }
        row["checks"] = [bc.to_json() for bc in checks]
        row["violations"] = [violation_record(G, m, bc) for bc in checks if bc.verdict == VIOLATED]
    except WallClockExceeded:
        skipped = {"applicable": None, "bound": None, "reg": None, "verdict": SKIPPED, "exact": None,
                   "detail": {"reason": f"wall-clock budget {cfg.timeout}s exceeded"}}
        row.update(reg=None, exact=None, timeout=True, violations=[],
                   checks=[{"theorem": t, **skipped} for t in ids])
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    row["seconds"] = round(time.perf_counter() - start, 4)
    return row


@dataclass
class SweepReport:
    config: dict
    rows: list[dict]
    summary: dict
    attainment: dict
    field_discrepancies: list
    timing: dict = field(default_factory=dict)

    @property
    def violations(self) -> list[dict]:
        return [v for r in self.rows for v in r["violations"]]

    def to_json(self, with_timing: bool = True) -> dict:
        out = {
            "config": self.config,
            "summary": self.summary,
            "attainment": self.attainment,
            "field_discrepancies": self.field_discrepancies,
            "rows": self.rows if with_timing else [{k: v for k, v in r.items() if k != "seconds"} for r in self.rows],
        }
        if with_timing:
            out["timing"] = self.timing
        return out


def _summarize(rows: list[dict]) -> tuple[dict, dict, list]:
    verdicts: Counter = Counter()
    per_theorem: dict[str, Counter] = {}
    attain: dict[str, list[str]] = {}
    discrepancies = []
    for r in rows:
        if r.get("timeout"):
            verdicts["timeout"] += 1
        for bc in r["checks"]:
            verdicts[bc["verdict"]] += 1
            per_theorem.setdefault(bc["theorem"], Counter())[bc["verdict"]] += 1
            if bc["verdict"] == HOLDS and bc["bound"] == bc["reg"] and bc["reg"] is not None:
                attain.setdefault(f"{bc['theorem']}@m={r['m']}", []).append(r["graph6"])
        if r.get("exact") and r.get("reg") == r.get("n_minus_c"):
            attain.setdefault(f"reg=n-c@m={r['m']}", []).append(r["graph6"])
        for p, val in r.get("other_fields", {}).items():
            if val != r["reg"]:
                discrepancies.append({"graph6": r["graph6"], "m": r["m"], "char": int(p), "reg": val, "base_reg": r["reg"]})
    summary = {
        "rows": len(rows),
        **{k: verdicts.get(k, 0) for k in (HOLDS, VIOLATED, SKIPPED, BUDGET)},
        "timeouts": verdicts.get("timeout", 0),
        "per_theorem": {t: dict(sorted(c.items())) for t, c in sorted(per_theorem.items())},
    }
    return summary, attain, discrepancies


def run_sweep(cfg: SweepConfig, violations_path: str | os.PathLike | None = None) -> SweepReport:
    """Deterministic sweep: rows follow corpus order, then m, whatever the worker count."""
    t0 = time.perf_counter()
    tasks = [(name, to_graph6(G).decode(), m, cfg) for name, G in corpus(cfg) for m in cfg.ms]
    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * cfg.workers))))
    else:
        rows = [_run_one(t) for t in tasks]
    summary, attain, disc = _summarize(rows)
    conf = asdict(cfg)
    conf.pop("workers")
    report = SweepReport(conf, rows, summary, attain, disc, {"seconds": round(time.perf_counter() - t0, 3)})
    if violations_path is not None:
        with open(violations_path, "w") as fh:
            for v in report.violations:
                fh.write(json.dumps(v, sort_keys=True) + "\n")
    return report
