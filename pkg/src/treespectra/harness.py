"""Exhaustive verification runs: stream a family, apply one checker per
graph, and emit a JSONL report plus a CSV summary and a PNG figure.

Output is deterministic byte for byte: records appear in the family's
generation order regardless of worker count, because workers own contiguous
mask ranges whose buffered records are concatenated in range order.
"""

from __future__ import annotations

import csv
import json
import time
from collections import Counter
from dataclasses import dataclass
from multiprocessing import get_context
from pathlib import Path

from . import checks as ck
from . import enumeration as en

_JSON_KEYS = (
    "graph6",
    "theorem",
    "k",
    "r",
    "t",
    "hypothesis",
    "hypothesis_holds",
    "conclusion_holds",
    "verdict",
)


@dataclass(frozen=True)
class RunSummary:
    theorem: str
    family: str
    n: int
    k: int | None
    t: int | None
    total: int
    passes: int
    vacuous: int
    boundary: int
    counterexamples: int
    seconds: float
    min_pass_margin: float | None


def _json_value(v):
    if isinstance(v, float):
        return float(f"{v:.12g}")
    if v is None or isinstance(v, (bool, int, str)):
        return v
    raise TypeError(f"unexpected record value {v!r}")


def record_json_line(rec: ck.VerificationRecord) -> str:
    payload = {
        "graph6": rec.graph6,
        "theorem": rec.theorem,
        "k": rec.k,
        "r": rec.r,
        "t": rec.t,
        "hypothesis": {name: _json_value(val) for name, val in rec.hypothesis.items()},
        "hypothesis_holds": rec.hypothesis_holds,
        "conclusion_holds": rec.conclusion_holds,
        "verdict": rec.verdict,
    }
    return json.dumps(payload)


def pass_margin(rec: ck.VerificationRecord) -> float | None:
    """How far a passing graph clears its hypothesis threshold."""
    h = rec.hypothesis
    tid = rec.theorem
    if tid == "T3.6-ktree-lambda4":
        return None if h["rho"] is None else h["rho"] - h["lambda4"]
    if tid == "T4.3-leaf-spectral":
        return h["lambda1"] - h["threshold"]
    if tid == "C4.4-leaf-spectral-t1":
        return None if h["threshold"] is None else h["lambda1"] - h["threshold"]
    if tid in ("T5.2-leaf-laplacian", "C5.3-leaf-laplacian-tconn"):
        return h["bound"] - h["mu1"]
    if tid == "T5.4-leaf-complement":
        return h["bound"] - h["lambda1_complement"]
    if tid == "L5.1-partition-bound":
        slacks = [s for s in (h["min_x_slack"], h["min_s_slack"]) if s is not None]
        return min(slacks) if slacks else None
    return None


def _shard_worker(args) -> tuple[list[str], Counter, list[float]]:
    spec, theorem, k, t, lo, hi = args
    lines: list[str] = []
    counts: Counter = Counter()
    margins: list[float] = []
    rng = None if lo is None else (lo, hi)
    for g in en.generate(spec, mask_range=rng):
        rec = ck.apply_theorem(theorem, g, k, t)
        lines.append(record_json_line(rec))
        counts[rec.verdict] += 1
        if rec.verdict == ck.PASS:
            m = pass_margin(rec)
            if m is not None:
                margins.append(m)
    return lines, counts, margins


def run_verification(
    spec: en.FamilySpec,
    theorem: str,
    k: int | None = None,
    t: int | None = None,
    report_path: str | None = None,
    workers: int = 1,
    figure: bool = True,
) -> RunSummary:
    """Check one theorem over one family; write report_path (JSONL) plus a
    .csv summary and .png figure beside it when report_path is given.

    Only plain all/connected scans shard across workers; dedup, regular,
    and file streams run single-worker (their generation cannot be split
    by mask range).
    """
    theorem = ck.resolve_theorem(theorem)
    if theorem != "L5.1-partition-bound" and k is None:
        raise ValueError(f"theorem {theorem} needs k")
    shardable = spec.kind in ("all", "connected") and not spec.dedup_iso
    workers = max(1, workers) if shardable else 1

    start = time.perf_counter()
    if workers == 1:
        shards = [_shard_worker((spec, theorem, k, t, None, None))]
    else:
        nbits = spec.n * (spec.n - 1) // 2
        hi = 1 << nbits
        cuts = [hi * i // workers for i in range(workers + 1)]
        jobs = [(spec, theorem, k, t, lo, up) for lo, up in zip(cuts, cuts[1:])]
        with get_context("fork").Pool(workers) as pool:
            shards = pool.map(_shard_worker, jobs)
    elapsed = time.perf_counter() - start

    counts: Counter = Counter()
    margins: list[float] = []
    for _, shard_counts, shard_margins in shards:
        counts.update(shard_counts)
        margins.extend(shard_margins)
    summary = RunSummary(
        theorem=theorem,
        family=spec.kind,
        n=spec.n,
        k=k,
        t=t,
        total=sum(counts.values()),
        passes=counts[ck.PASS],
        vacuous=counts[ck.VACUOUS],
        boundary=counts[ck.BOUNDARY],
        counterexamples=counts[ck.COUNTEREXAMPLE],
        seconds=elapsed,
        min_pass_margin=min(margins) if margins else None,
    )

    if report_path is not None:
        report = Path(report_path)
        if report.parent != Path(""):
            report.parent.mkdir(parents=True, exist_ok=True)
        with open(report, "w") as fh:
            for lines, _, _ in shards:
                for line in lines:
                    fh.write(line + "\n")
        write_summary_csv(summary, report.with_suffix(".csv"))
        if figure:
            from .figures import render_report_figure

            title = f"{theorem} over {spec.kind} n={spec.n}" + (
                f" k={k}" if k is not None else ""
            )
            render_report_figure(dict(counts), margins, str(report.with_suffix(".png")), title)
    return summary


def write_summary_csv(summary: RunSummary, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["theorem", "family", "n", "k", "total", "pass", "vacuous", "boundary",
             "counterexample", "seconds"]
        )
        w.writerow(
            [summary.theorem, summary.family, summary.n,
             "" if summary.k is None else summary.k,
             summary.total, summary.passes, summary.vacuous, summary.boundary,
             summary.counterexamples, f"{summary.seconds:.3f}"]
        )
