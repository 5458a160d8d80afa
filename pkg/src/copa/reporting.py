"""Verification report records shared by the check operations and the CLI."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class VerificationReport:
    suite: str
    ranges: str
    attempted: int = 0
    passed: int = 0
    counterexample: Optional[str] = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.counterexample is None and self.passed == self.attempted

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        out = (
            f"suite={self.suite} ranges=[{self.ranges}] "
            f"attempted={self.attempted} passed={self.passed} status={status}"
        )
        if self.counterexample is not None:
            out += f" counterexample={self.counterexample!r}"
        return out


class Checker:
    """Accumulates check outcomes; keeps only the first counterexample."""

    def __init__(self, suite: str, ranges: str):
        self.report = VerificationReport(suite=suite, ranges=ranges)
        self._t0 = time.perf_counter()

    def equal(self, lhs, rhs, label: str) -> bool:
        self.report.attempted += 1
        if lhs == rhs:
            self.report.passed += 1
            return True
        if self.report.counterexample is None:
            self.report.counterexample = f"{label}: {lhs} != {rhs}"
        return False

    def check(self, condition: bool, label: str) -> bool:
        self.report.attempted += 1
        if condition:
            self.report.passed += 1
            return True
        if self.report.counterexample is None:
            self.report.counterexample = label
        return False

    def count_pass(self, k: int) -> None:
        self.report.attempted += k
        self.report.passed += k

    def fail(self, label: str) -> None:
        self.report.attempted += 1
        if self.report.counterexample is None:
            self.report.counterexample = label

    def absorb(self, other: VerificationReport) -> None:
        """Fold a sub-report into this one, prefixing its counterexample."""
        self.report.attempted += other.attempted
        self.report.passed += other.passed
        if self.report.counterexample is None and other.counterexample is not None:
            self.report.counterexample = f"{other.suite}: {other.counterexample}"

    def done(self) -> VerificationReport:
        self.report.wall_time = time.perf_counter() - self._t0
        return self.report
