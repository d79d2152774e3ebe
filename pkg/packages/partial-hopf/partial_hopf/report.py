"""Verification reports shared by every checker.

A check evaluates one identity over a set of basis tuples. Each tuple gives
a :class:`ReportEntry` whose ``sides`` must all agree exactly; most laws have
two sides, a few (counit on both sides, antipode, cocycle normalization)
compare three. Failures are data, never exceptions.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, replace
from typing import Any, TypeVar

from .pool import parallel_map

log = logging.getLogger(__name__)

K = TypeVar("K")


def sides_agree(sides: Sequence[Any]) -> bool:
    first = sides[0]
    return all((side - first).is_zero for side in sides[1:])


@dataclass(frozen=True)
class ReportEntry:
    key: tuple[str, ...]
    sides: tuple[Any, ...]
    passed: bool
    law: str = ""

    @classmethod
    def compare(cls, key: Iterable[str], *sides: Any, law: str = "") -> ReportEntry:
        if len(sides) < 2:
            raise ValueError("an entry compares at least two sides")
        return cls(tuple(key), tuple(sides), sides_agree(sides), law)

    @property
    def lhs(self) -> Any:
        return self.sides[0]

    @property
    def rhs(self) -> Any:
        return self.sides[-1]


@dataclass(frozen=True)
class VerificationReport:
    check: str
    title: str
    entries: tuple[ReportEntry, ...]
    informational: bool = False

    @classmethod
    def collect(
        cls,
        check: str,
        title: str,
        keys: Iterable[K],
        evaluate: Callable[[K], ReportEntry | Iterable[ReportEntry]],
    ) -> VerificationReport:
        """Evaluate every key (possibly in worker threads) in key order."""
        entries: list[ReportEntry] = []
        for produced in parallel_map(evaluate, keys):
            if isinstance(produced, ReportEntry):
                entries.append(produced)
            else:
                entries.extend(produced)
        report = cls(check, title, tuple(entries))
        log.debug("%s: %d/%d entries hold", check, report.holding, len(report.entries))
        return report

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def holding(self) -> int:
        return sum(1 for entry in self.entries if entry.passed)

    @property
    def counterexamples(self) -> tuple[ReportEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.passed)

    def as_informational(self) -> VerificationReport:
        return replace(self, informational=True)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class VerificationSuite:
    """Reports run together; informational reports never decide the outcome."""

    name: str
    reports: tuple[VerificationReport, ...]

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports if not report.informational)

    def report(self, check: str) -> VerificationReport:
        for report in self.reports:
            if report.check == check:
                return report
        raise KeyError(check)

    @property
    def counterexamples(self) -> tuple[tuple[VerificationReport, ReportEntry], ...]:
        return tuple(
            (report, entry)
            for report in self.reports
            if not report.informational
            for entry in report.counterexamples
        )
