"""Check records and verification reports.

A VerificationReport is the return value of every grid- or case-level
inequality checker in this package.  Each individual comparison becomes a
CheckRecord carrying lhs, rhs and the signed slack lhs - rhs, so that a
report can be rendered or dumped to CSV without re-running anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping


@dataclass(frozen=True)
class CheckRecord:
    name: str
    inputs: tuple
    lhs: float
    rhs: float
    slack: float
    passed: bool
    skipped: bool = False
    note: str = ""

    def csv_row(self):
        return (self.name, *self.inputs, repr(self.lhs), repr(self.rhs),
                repr(self.slack))


@dataclass
class VerificationReport:
    title: str
    checks: list[CheckRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name, inputs, lhs, rhs, tol=0.0, skipped=False, note=""):
        if skipped:
            rec = CheckRecord(name, tuple(inputs), math.nan, math.nan,
                              math.nan, passed=True, skipped=True, note=note)
        else:
            slack = lhs - rhs
            rec = CheckRecord(name, tuple(inputs), lhs, rhs, slack,
                              passed=slack >= -tol, note=note)
        self.checks.append(rec)
        return rec

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    @property
    def skipped(self):
        return [c for c in self.checks if c.skipped]

    @property
    def all_passed(self):
        return not self.failures

    @property
    def min_slack(self):
        slacks = [c.slack for c in self.checks
                  if not c.skipped and math.isfinite(c.slack)]
        return min(slacks) if slacks else math.inf

    def counted(self):
        return len([c for c in self.checks if not c.skipped])


@dataclass(frozen=True)
class BoundReport:
    """A certified one-sided or two-sided bound on a named quantity,
    together with the assumptions it was derived under and a provenance
    string naming the estimate used."""

    quantity: str
    lower: float | None
    upper: float | None
    assumptions: Mapping[str, float]
    provenance: str
    notes: tuple[str, ...] = ()
    details: tuple = ()

    def __post_init__(self):
        if (self.lower is not None and self.upper is not None
                and not self.lower <= self.upper):
            raise ValueError(
                f"bound interval is empty: lower {self.lower} > "
                f"upper {self.upper} for {self.quantity}")
        object.__setattr__(self, "assumptions",
                           MappingProxyType(dict(self.assumptions)))
