"""Violation reports shared by every checker."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class PreconditionError(ValueError):
    """A constructor was handed data that fails a required check."""

    def __init__(self, message: str, report: "Report | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    discrepancy: object

    def describe(self) -> str:
        return f"{self.law} at {self.witness}: {self.discrepancy!r}"


class Report:
    """An ordered collection of violations; empty means every law holds."""

    def __init__(self, violations: Iterable[Violation] = ()):
        self.violations = tuple(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __add__(self, other: "Report") -> "Report":
        return Report(self.violations + other.violations)

    def __eq__(self, other):
        return isinstance(other, Report) and self.violations == other.violations

    def __repr__(self):
        return f"Report({len(self.violations)} violations)"

    def laws(self) -> list:
        seen = []
        for v in self.violations:
            if v.law not in seen:
                seen.append(v.law)
        return seen

    def by_law(self, law: str) -> "Report":
        return Report(v for v in self.violations if v.law == law or v.law.startswith(law + "/"))

    def prefixed(self, prefix: str) -> "Report":
        return Report(Violation(f"{prefix}/{v.law}", v.witness, v.discrepancy) for v in self.violations)


def combine(*parts) -> Report:
    """Concatenate (prefix, report) pairs or bare reports."""
    out = []
    for part in parts:
        if isinstance(part, tuple):
            prefix, rep = part
            out.extend(rep.prefixed(prefix).violations)
        else:
            out.extend(part.violations)
    return Report(out)
