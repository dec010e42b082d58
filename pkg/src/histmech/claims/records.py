"""Claim records, expectation checks and their serialized forms."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Literal

from ..kernels import Tolerance

Verdict = Literal["CONFIRMED", "REFUTED", "INCONCLUSIVE"]
VERDICTS = ("CONFIRMED", "REFUTED", "INCONCLUSIVE")


@dataclass(frozen=True)
class HistoricalAssertion:
    source: str
    statement: str
    value: float | None = None
    units: str | None = None


@dataclass(frozen=True)
class Computed:
    value: float | None
    units: str | None
    method: str


@dataclass(frozen=True)
class Check:
    """One named expectation on a computed quantity.

    ``op`` is ``approx`` (within ``tolerance`` of ``target``, exact when it is None), ``gt``/``lt``
    (strict comparison with ``target``) or ``true`` (``value`` is truthy).
    """

    name: str
    value: float
    op: Literal["approx", "gt", "lt", "true"] = "approx"
    target: float | None = None
    tolerance: Tolerance | None = None

    @property
    def passed(self) -> bool:
        v = self.value
        if self.op == "true":
            return bool(v)
        if not math.isfinite(v):
            return False
        if self.op == "gt":
            return v > self.target
        if self.op == "lt":
            return v < self.target
        if self.tolerance is None:
            return v == self.target
        return abs(v - self.target) <= self.tolerance.bound(self.target)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "op": self.op, "value": _num(self.value), "passed": self.passed}
        if self.target is not None:
            out["target"] = _num(self.target)
        if self.tolerance is not None:
            out["tolerance"] = {"abs": self.tolerance.abs, "rel": self.tolerance.rel}
        return out


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    title: str
    section_ref: str
    historical_assertion: HistoricalAssertion
    citations: tuple[str, ...]
    expected_verdict: Verdict
    computed: Computed | None = None
    tolerance: Tolerance | None = None
    verdict: Verdict | None = None
    checks: tuple[Check, ...] = ()
    details: tuple[tuple[str, Any], ...] = ()
    note: str | None = None
    error: str | None = None

    @property
    def evaluated(self) -> bool:
        return self.verdict is not None or self.error is not None

    @property
    def matches_expectation(self) -> bool:
        return self.error is None and self.verdict == self.expected_verdict and all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        out = []
        if self.error is not None:
            out.append(f"error: {self.error}")
        if self.verdict is not None and self.verdict != self.expected_verdict:
            out.append(f"verdict {self.verdict} != expected {self.expected_verdict}")
        out.extend(f"check failed: {c.name}" for c in self.checks if not c.passed)
        return out

    def to_dict(self) -> dict[str, Any]:
        h = self.historical_assertion
        out: dict[str, Any] = {
            "id": self.id,
            "title": self.title,
            "section_ref": self.section_ref,
            "historical_assertion": {
                "source": h.source,
                "statement": h.statement,
                "value": _num(h.value),
                "units": h.units,
            },
            "citations": list(self.citations),
            "expected_verdict": self.expected_verdict,
        }
        if self.evaluated:
            out["computed"] = None if self.computed is None else {
                "value": _num(self.computed.value),
                "units": self.computed.units,
                "method": self.computed.method,
            }
            out["tolerance"] = None if self.tolerance is None else {"abs": self.tolerance.abs, "rel": self.tolerance.rel}
            out["verdict"] = self.verdict
            out["checks"] = [c.to_dict() for c in self.checks]
            out["details"] = {k: _num(v) if isinstance(v, float) else v for k, v in self.details}
            out["matches_expectation"] = self.matches_expectation
            if self.note is not None:
                out["note"] = self.note
            if self.error is not None:
                out["error"] = self.error
        return out


def _num(v):
    """JSON-safe number: non-finite floats become strings."""
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def numeric_verdict(historical: float, computed: float, tol: Tolerance) -> Verdict:
    return "CONFIRMED" if abs(computed - historical) <= tol.bound(historical) else "REFUTED"


__all__ = [
    "Verdict",
    "VERDICTS",
    "HistoricalAssertion",
    "Computed",
    "Check",
    "ClaimRecord",
    "numeric_verdict",
]
