"""Pass/fail reports emitted by the verifiers, serialisable to JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

MAX_WITNESSES = 25


def _jsonable(x: Any) -> Any:
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    return str(x)


@dataclass
class Report:
    """Counts of checks per named condition plus witnesses for every failure."""

    name: str
    counts: Dict[str, List[int]] = field(default_factory=dict)
    failures: List[dict] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    def check(self, condition: str, ok: bool, **witness) -> bool:
        total_failed = self.counts.setdefault(condition, [0, 0])
        total_failed[0] += 1
        if not ok:
            total_failed[1] += 1
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append({"check": condition, **_jsonable(witness)})
        return ok

    def error(self, message: str) -> None:
        self.errors.append(message)

    @property
    def passed(self) -> bool:
        return not self.errors and bool(self.counts) and all(f == 0 for _, f in self.counts.values())

    def failed_checks(self) -> List[str]:
        return [c for c, (_, f) in self.counts.items() if f]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": {c: {"total": t, "failed": f} for c, (t, f) in self.counts.items()},
            "failures": self.failures,
            "errors": self.errors,
            "details": _jsonable(self.details),
            "notes": self.notes,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        n = sum(t for t, _ in self.counts.values())
        extra = f" errors={self.errors}" if self.errors else ""
        bad = self.failed_checks()
        if bad:
            extra += f" failed={bad}"
        return f"{status} {self.name}: {n} checks{extra}"
