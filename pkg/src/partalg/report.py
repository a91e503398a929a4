"""Structured results of an identity-checking run."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Check:
    id: str
    indices: tuple
    passed: bool
    diff_terms: int = 0  # number of terms in lhs - rhs when failing

    def to_json(self) -> dict:
        out = {"id": self.id, "indices": list(self.indices), "pass": self.passed}
        if not self.passed:
            out["diff_terms"] = self.diff_terms
        return out


@dataclass
class VerificationReport:
    suite: str
    rank: Optional[int] = None
    config: Optional[dict] = None  # tensor runs record (n, r) here
    checks: list = field(default_factory=list)
    out_of_range: int = 0
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def vacuous(self) -> bool:
        return not self.checks

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        """True iff no check failed (a vacuous report passes but is flagged)."""
        return not self.failures

    def first_failure(self) -> Optional[Check]:
        fails = self.failures
        return min(fails, key=lambda c: (c.indices, c.id)) if fails else None

    def to_json(self) -> dict:
        # elapsed time is deliberately left out so reports are byte-reproducible
        out = {"suite": self.suite}
        if self.config is not None:
            out.update(self.config)
        else:
            out["rank"] = self.rank
        out["checks"] = [c.to_json() for c in self.checks]
        out["vacuous"] = self.vacuous
        out["out_of_range"] = self.out_of_range
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    def summary(self) -> str:
        where = (
            " ".join(f"{k}={v}" for k, v in self.config.items())
            if self.config is not None
            else f"rank={self.rank}"
        )
        if self.vacuous:
            status = "VACUOUS"
        elif self.passed:
            status = "PASS"
        else:
            status = "FAIL"
        line = (
            f"{status:8} {self.suite:22} {where:12} "
            f"{len(self.checks) - len(self.failures)}/{len(self.checks)} ok"
        )
        if self.out_of_range:
            line += f", {self.out_of_range} out of range"
        bad = self.first_failure()
        if bad is not None:
            line += f"; first failure {bad.id} at {list(bad.indices)} ({bad.diff_terms} terms)"
        return line
