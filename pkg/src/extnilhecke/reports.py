"""Machine-readable verification reports.

Every verification suite in this package returns a :class:`Report`, a list
of named checks with parameters, a pass flag, and an optional witness.  The
JSON shape is ``{check, parameters, pass, witness?}`` per entry; ordering is
canonical (by name, then parameters) so serialized reports are diffable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"check": self.name, "parameters": self.params, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, params: dict, passed: bool, witness: dict | None = None) -> None:
        self.checks.append(CheckResult(name, dict(params), bool(passed), witness))

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def sorted(self) -> "Report":
        return Report(
            sorted(
                self.checks,
                key=lambda c: (c.name, json.dumps(c.params, sort_keys=True, default=str)),
            )
        )

    def to_json_list(self) -> list[dict]:
        return [c.to_json_dict() for c in self.sorted().checks]

    def summary(self) -> str:
        done = sum(1 for c in self.checks if c.passed)
        return f"{done}/{len(self.checks)} checks passed"
