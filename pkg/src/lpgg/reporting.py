"""Check results and verification reports shared by the suites and CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
PASS_CORRECTED = "pass-corrected"
FAIL = "fail"
SKIPPED = "skipped"

STATUSES = (PASS, PASS_CORRECTED, FAIL, SKIPPED)


@dataclass
class CheckResult:
    name: str
    claim: str
    status: str
    details: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "status": self.status,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name, claim, status, details=""):
        self.checks.append(CheckResult(name, claim, status, details))

    def extend(self, results):
        self.checks.extend(results)

    def counts(self) -> dict:
        out = {status: 0 for status in STATUSES}
        for check in self.checks:
            out[check.status] += 1
        return out

    @property
    def corrected(self) -> bool:
        return any(check.status == PASS_CORRECTED for check in self.checks)

    @property
    def failed(self) -> bool:
        return any(check.status == FAIL for check in self.checks)

    def exit_code(self) -> int:
        """1 when anything failed, else 0 (corrected results still pass)."""
        return 1 if self.failed else 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "checks": [check.to_json() for check in self.checks],
            "summary": {
                **self.counts(),
                "corrected": self.corrected,
                "exit_code": self.exit_code(),
            },
        }

    def render_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for check in self.checks:
            line = f"  [{check.status:>14s}] {check.name}: {check.claim}"
            if check.details:
                line += f"  -- {check.details}"
            lines.append(line)
        counts = self.counts()
        lines.append(
            "  summary: "
            + ", ".join(f"{k}={v}" for k, v in counts.items() if v)
            + f", exit={self.exit_code()}"
        )
        return "\n".join(lines)


def merge_reports(suite: str, seed: int, reports) -> VerificationReport:
    merged = VerificationReport(suite, seed)
    for report in reports:
        for check in report.checks:
            merged.checks.append(
                CheckResult(
                    f"{report.suite}/{check.name}",
                    check.claim,
                    check.status,
                    check.details,
                )
            )
    return merged
