"""Check records shared by every verification routine."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class CheckRecord:
    """Outcome of one named check.

    A failing record should carry a ``witness``: the smallest piece of data
    (an ``n``, a ``k``, a subset, a polynomial) that reproduces the failure.
    """

    id: str
    params: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    witness: dict[str, Any] | None = None
    info: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {k: v for k, v in d.items() if v is not None}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CheckRecord:
        return cls(
            id=d["id"],
            params=dict(d.get("params", {})),
            passed=bool(d["passed"]),
            witness=d.get("witness"),
            info=d.get("info"),
        )


def check(id: str, passed: bool, witness: dict | None = None, info: dict | None = None, **params) -> CheckRecord:
    """Build a record; the witness is dropped when the check passes."""
    return CheckRecord(id=id, params=params, passed=bool(passed),
                       witness=None if passed else (witness or dict(params)), info=info)


def all_passed(records) -> bool:
    return all(r.passed for r in records)


def merge(id: str, recs, info: dict | None = None, **params) -> CheckRecord:
    """Collapse a batch of records into one; the first failure supplies the witness."""
    recs = list(recs)
    bad = next((r for r in recs if not r.passed), None)
    return CheckRecord(id=id, params=params, passed=bad is None,
                       witness=None if bad is None else (bad.witness or bad.params),
                       info={"checks": len(recs), **(info or {})})
