"""Run reports: ordered check lists with deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "inconclusive")


@dataclass
class Check:
    """One verified claim: pass, fail (with witness), or inconclusive (with bound)."""

    name: str
    status: str
    witness: str = ""
    anchor: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    """A case's ordered checks plus the bounds they were computed under."""

    case: str
    bounds: dict
    checks: list = field(default_factory=list)

    def add(self, name: str, ok, witness: str = "", anchor: str = "") -> None:
        """Record a check: True -> pass, False -> fail, None -> inconclusive."""
        status = "inconclusive" if ok is None else ("pass" if ok else "fail")
        self.checks.append(Check(name, status, witness, anchor))

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    def all_pass(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def any_fail(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "bounds": dict(sorted(self.bounds.items())),
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness, "anchor": c.anchor}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"case: {self.case}"]
        lines.append("bounds: " + ", ".join(f"{k}={v}" for k, v in sorted(self.bounds.items())))
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            line = f"  [{c.status:>12}] {c.name:<{width}}"
            if c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        n = self.counts()
        lines.append(f"  {n['pass']} pass, {n['fail']} fail, {n['inconclusive']} inconclusive")
        return "\n".join(lines) + "\n"


def aggregate_to_json(reports: list) -> str:
    return json.dumps({"reports": [r.to_dict() for r in reports]},
                      indent=2, sort_keys=True) + "\n"


def aggregate_to_text(reports: list) -> str:
    parts = [r.to_text() for r in reports]
    total = {s: sum(r.counts()[s] for r in reports) for s in STATUSES}
    parts.append(f"total: {total['pass']} pass, {total['fail']} fail, "
                 f"{total['inconclusive']} inconclusive\n")
    return "\n".join(parts)
