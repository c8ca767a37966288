"""Verification reports: named checks with a pass flag each."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    id: str
    expected: str
    observed: str
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    rank: int
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, expected: str, observed: str, passed: bool) -> None:
        self.checks.append(Check(check_id, expected, observed, bool(passed)))

    def merge(self, other: VerificationReport) -> None:
        prefix = other.suite.split(":")[0]
        for c in other.checks:
            self.checks.append(Check(f"{prefix}/{c.id}", c.expected, c.observed, c.passed))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "rank": self.rank,
            "checks": [
                {"id": c.id, "expected": c.expected, "observed": c.observed, "passed": c.passed}
                for c in self.checks
            ],
            "overall": self.overall,
        }

    def to_text(self) -> str:
        lines = [f"[{'PASS' if self.overall else 'FAIL'}] {self.suite} rank={self.rank}"]
        for c in self.checks:
            lines.append(f"  {'ok  ' if c.passed else 'FAIL'} {c.id}: {c.observed} (expected {c.expected})")
        return "\n".join(lines)
