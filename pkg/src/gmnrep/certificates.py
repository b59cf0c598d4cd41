"""Pass/fail certificates produced by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    label: str
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> tuple[Check, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def merged(self, other: Certificate, label: str | None = None) -> Certificate:
        return Certificate(label or self.label, self.checks + other.checks)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, **({"detail": c.detail} if c.detail else {})}
                for c in self.checks
            ],
        }


def combine(label: str, certificates) -> Certificate:
    checks: tuple[Check, ...] = ()
    for cert in certificates:
        checks += cert.checks
    return Certificate(label, checks)
