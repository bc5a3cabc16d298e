"""Outcome records for verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

MAX_RECORDED_FAILURES = 20


@dataclass
class Failure:
    instance: dict
    left: Any
    right: Any
    label: str = ""


@dataclass
class Report:
    """Result of one named suite.

    For an ordinary suite ``passed`` means no instance failed.  An
    expected-fail suite documents a printed identity that is believed wrong:
    it passes exactly when at least one counterexample was found, and the
    first one is kept in ``failures``.
    """

    suite: str
    bounds: dict = field(default_factory=dict)
    checked: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0
    expected_fail: bool = False
    note: str = ""

    def check(self, instance: dict, left, right, label: str = "") -> bool:
        self.checked += 1
        ok = left == right
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(Failure(dict(instance), left, right, label))
        return ok

    def fail(self, instance: dict, left, right, label: str = ""):
        """Record a failure that was not detected by an equality check."""
        self.checked += 1
        self.failed += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(Failure(dict(instance), left, right, label))

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failed += other.failed
        room = MAX_RECORDED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])
        return self

    @property
    def passed(self) -> bool:
        if self.expected_fail:
            return self.failed > 0
        return self.failed == 0

    @property
    def counterexample(self):
        return self.failures[0] if self.failures else None
