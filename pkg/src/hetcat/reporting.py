"""Deterministic pass/fail reports.

A Report is the machine-checkable outcome of one verification run.  The
rendered forms (text and JSON) are byte-identical for identical inputs:
violations are pre-sorted by canonical key and wall-clock timing is kept
out of the serialized body unless explicitly requested.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import CheckFailed, Violation

PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass(frozen=True)
class Report:
    subject: str
    verdict: str
    violations: tuple[Violation, ...] = ()
    statistics: dict = field(default_factory=dict)
    details: tuple[str, ...] = ()
    elapsed_seconds: float | None = None

    def __post_init__(self):
        if self.verdict == PASS and self.violations:
            raise ValueError("pass verdict with non-empty violations")
        if self.verdict == FAIL and not self.violations:
            raise ValueError("fail verdict with empty violations")


def passed(subject: str, statistics: dict | None = None, details=(),
           elapsed: float | None = None) -> Report:
    return Report(subject, PASS, (), dict(statistics or {}), tuple(details), elapsed)


def failed(subject: str, violations, statistics: dict | None = None, details=(),
           elapsed: float | None = None) -> Report:
    violations = tuple(sorted(violations, key=lambda v: v.key))
    return Report(subject, FAIL, violations, dict(statistics or {}), tuple(details), elapsed)


def from_exception(subject: str, exc: Exception) -> Report:
    if isinstance(exc, CheckFailed) and exc.violations:
        return failed(subject, exc.violations, details=(str(exc),))
    if isinstance(exc, CheckFailed):
        return failed(subject, (Violation("check", (), str(exc)),))
    return Report(subject, ERROR, (), {}, (f"{type(exc).__name__}: {exc}",))


def render_text(report: Report, timing: bool = False) -> str:
    lines = [f"subject: {report.subject}", f"verdict: {report.verdict}"]
    if report.statistics:
        stats = " ".join(f"{k}={v}" for k, v in report.statistics.items())
        lines.append(f"statistics: {stats}")
    if timing and report.elapsed_seconds is not None:
        lines.append(f"elapsed_seconds: {report.elapsed_seconds:.3f}")
    for d in report.details:
        lines.append(f"  {d}")
    if report.violations:
        lines.append(f"violations ({len(report.violations)}):")
        for v in report.violations:
            lines.append(f"  [{v.kind}] {v.message}")
    return "\n".join(lines) + "\n"


def to_json_dict(report: Report, timing: bool = False) -> dict:
    body = {
        "subject": report.subject,
        "verdict": report.verdict,
        "statistics": report.statistics,
        "details": list(report.details),
        "violations": [
            {"kind": v.kind, "key": list(v.key), "message": v.message}
            for v in report.violations
        ],
    }
    if timing and report.elapsed_seconds is not None:
        body["elapsed_seconds"] = round(report.elapsed_seconds, 3)
    return body


def render_json(report: Report, timing: bool = False) -> str:
    return json.dumps(to_json_dict(report, timing), indent=2, sort_keys=True) + "\n"


def parallel_map(fn, items, workers: int = 1) -> list:
    """Order-preserving map; results are identical for any worker count."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
