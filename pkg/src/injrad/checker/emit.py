"""Writing report streams as JSONL or CSV, with a per-claim summary."""

from __future__ import annotations

import csv
import json
import sys
from collections import Counter
from typing import IO, Iterable

from .report import CLAIMS, STATUSES, Report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2

CSV_FIELDS = [
    "algebra_id", "source", "prime", "n", "total_dim", "loewy_length",
    "gldim", "id_J", "id_J2", "id_JmodJ2", "gorenstein", "local", "selfinjective", "nakayama",
    *CLAIMS,
]


def jsonl_line(report: Report, include_timing: bool = False) -> str:
    return json.dumps(report.to_json(include_timing), sort_keys=True, separators=(",", ":"))


def csv_row(report: Report) -> dict:
    row = {
        "algebra_id": report.algebra_id,
        "source": report.source,
        "prime": report.prime,
        "n": report.n,
        "total_dim": report.total_dim,
        "loewy_length": report.loewy_length,
        "gldim": str(report.gldim),
        "id_J": str(report.id_J),
        "id_J2": str(report.id_J2),
        "id_JmodJ2": str(report.id_JmodJ2),
        "gorenstein": report.gorenstein["verdict"],
        "local": report.flags["local"],
        "selfinjective": report.flags["selfinjective"],
        "nakayama": report.flags["nakayama"],
    }
    row.update({c: report.status(c) for c in CLAIMS})
    return row


class Summary:
    """Counts of verdict statuses per claim, plus extra scan checks."""

    def __init__(self):
        self.records = 0
        self.counts: dict[str, Counter] = {c: Counter() for c in CLAIMS}
        self.checks: dict[str, Counter] = {}
        self.violation = False

    def add(self, report: Report) -> None:
        self.records += 1
        for v in report.verdicts:
            self.counts[v.claim_id][v.status] += 1
        for name, check in report.checks.items():
            self.checks.setdefault(name, Counter())[check.get("status", "")] += 1
        self.violation |= report.has_violation

    def line(self) -> str:
        short = {"Confirmed": "confirmed", "ConsistentUndetermined": "undetermined",
                 "Violated": "violated", "NotApplicable": "n/a"}
        parts = []
        for c in CLAIMS:
            counts = " ".join(f"{short[s]}={self.counts[c][s]}" for s in STATUSES)
            parts.append(f"{c}[{counts}]")
        for name in sorted(self.checks):
            counts = " ".join(f"{short.get(s, s)}={k}" for s, k in sorted(self.checks[name].items()))
            parts.append(f"{name}[{counts}]")
        return f"summary: {self.records} algebras; " + "; ".join(parts)

    @property
    def exit_code(self) -> int:
        return EXIT_VIOLATION if self.violation else EXIT_OK


def emit(
    reports: Iterable[Report],
    fmt: str = "jsonl",
    out: IO[str] | None = None,
    summary_to: IO[str] | None = None,
    include_timing: bool = False,
) -> int:
    """Write every report, then the summary line; return the exit status.

    Records go to ``out`` (stdout by default) and the summary to ``summary_to``
    (stderr by default) so that the record stream stays byte-for-byte
    reproducible. Violations of C7 and C8 are counted but do not change the
    exit status; only C1 to C6 and scan checks do.
    """
    if fmt not in ("jsonl", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    out = sys.stdout if out is None else out
    summary_to = sys.stderr if summary_to is None else summary_to
    summary = Summary()
    try:
        writer = None
        if fmt == "csv":
            writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
            writer.writeheader()
        for report in reports:
            if writer is None:
                out.write(jsonl_line(report, include_timing) + "\n")
            else:
                writer.writerow(csv_row(report))
            summary.add(report)
        out.flush()
    except OSError as e:
        print(f"error: {e}", file=summary_to)
        return EXIT_ERROR
    print(summary.line(), file=summary_to)
    return summary.exit_code

