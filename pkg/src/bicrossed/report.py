"""Check results and report aggregation for the verification paths.

Every verifier in the package returns a CheckReport: an ordered list of
named checks, each pass/fail, with an optional witness describing the
first offending instance.  Reports render to JSON (the wire format used
by the CLI), to plain text, and to CSV rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" or "fail"
    witness: str | None = None

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CheckReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: str | None = None) -> None:
        self.checks.append(
            CheckResult(name, "pass" if ok else "fail", None if ok else witness)
        )

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(
                CheckResult(prefix + c.name, c.status, c.witness)
            )

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            line = f"[{mark}] {c.name}"
            if c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(
            f"{len(self.checks)} checks, "
            + ("all passed" if n_fail == 0 else f"{n_fail} failed")
        )
        return "\n".join(lines)

    def csv_rows(self) -> list[tuple[str, str, str]]:
        return [(c.name, c.status, c.witness or "") for c in self.checks]
