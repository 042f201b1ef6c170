"""Verification reports and their JSON / line serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .records import CheckRecord

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    suite: str
    ranges: dict[str, Any] = field(default_factory=dict)
    records: list[CheckRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(r.passed for r in self.records)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def extend(self, recs):
        self.records.extend(recs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "ranges": self.ranges,
            "records": [r.to_dict() for r in self.records],
            "summary": self.summary,
            "wall_time": round(self.wall_time, 6),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        return cls(suite=d["suite"], ranges=dict(d.get("ranges", {})),
                   records=[CheckRecord.from_dict(r) for r in d["records"]],
                   wall_time=float(d.get("wall_time", 0.0)))


def document(reports: list[VerificationReport], **meta) -> dict[str, Any]:
    passed = sum(r.summary["passed"] for r in reports)
    total = sum(r.summary["total"] for r in reports)
    return {
        "schema": SCHEMA_VERSION,
        **meta,
        "suites": [r.to_dict() for r in reports],
        "summary": {"total": total, "passed": passed, "failed": total - passed},
    }


def recount(doc: dict[str, Any]) -> dict[str, int]:
    """Recompute the summary of a parsed JSON document from its records."""
    total = passed = 0
    for s in doc["suites"]:
        for r in s["records"]:
            total += 1
            passed += bool(r["passed"])
    return {"total": total, "passed": passed, "failed": total - passed}


def _jsonable(x):
    # Fractions and other exact values are written as strings
    return str(x)


def dumps(obj: Any, **kw) -> str:
    return json.dumps(obj, default=_jsonable, ensure_ascii=False, **kw)


def format_record(suite: str, r: CheckRecord) -> str:
    params = " ".join(f"{k}={v}" for k, v in r.params.items())
    line = f"{'PASS' if r.passed else 'FAIL'} {suite} {r.id}"
    if params:
        line += " " + params
    if not r.passed:
        line += " witness=" + dumps(r.witness)
    return line


def format_summary(rep: VerificationReport) -> str:
    s = rep.summary
    return f"# {rep.suite}: {s['passed']}/{s['total']} passed in {rep.wall_time:.2f}s"
