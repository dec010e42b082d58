"""Full report over every registered claim, rendered as markdown or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import RunConfig
from .records import ClaimRecord
from .registry import REGISTRY, Registry

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class Report:
    records: tuple[ClaimRecord, ...]

    @property
    def errors(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.error is not None]

    @property
    def mismatches(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.error is None and not r.matches_expectation]

    @property
    def exit_code(self) -> int:
        if self.errors:
            return EXIT_NUMERIC
        return EXIT_MISMATCH if self.mismatches else EXIT_OK

    def render(self, fmt: str = "md") -> str:
        return render_json(self.records) if fmt == "json" else render_markdown(self.records)


def run_report(cfg: RunConfig | None = None, registry: Registry = REGISTRY) -> Report:
    return Report(tuple(registry.run_all(cfg or RunConfig())))


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def _cell(text: str) -> str:
    return text.replace("|", "\\|")


def _computed(r: ClaimRecord) -> str:
    if r.computed is None:
        return "-"
    unit = f" {r.computed.units}" if r.computed.units else ""
    return _fmt(r.computed.value) + unit


def render_claim_markdown(r: ClaimRecord) -> str:
    h = r.historical_assertion
    lines = [
        f"## {r.id}: {r.title}",
        "",
        f"- section: {r.section_ref}",
        f"- assertion ({h.source}): {h.statement}" + (f" [{(_fmt(h.value) + ' ' + (h.units or '')).strip()}]" if h.value is not None else ""),
        f"- computed: {_computed(r)}" + (f" ({r.computed.method})" if r.computed else ""),
        f"- verdict: {r.verdict or '-'} (expected {r.expected_verdict})",
    ]
    if r.tolerance is not None:
        lines.append(f"- tolerance: abs {r.tolerance.abs!r}, rel {r.tolerance.rel!r}")
    if r.note:
        lines.append(f"- note: {r.note}")
    if r.error:
        lines.append(f"- error: {r.error}")
    if r.checks:
        lines += ["", "| check | value | op | target | passed |", "|---|---|---|---|---|"]
        for c in r.checks:
            lines.append(f"| {_cell(c.name)} | {_fmt(c.value)} | {c.op} | {_fmt(c.target)} | {'yes' if c.passed else 'NO'} |")
    if r.details:
        lines.append("")
        lines += [f"- {k}: {_fmt(v)}" for k, v in r.details]
    return "\n".join(lines) + "\n"


def render_markdown(records) -> str:
    lines = [
        "# Claim report",
        "",
        "| id | section | assertion | computed | verdict | expected | match |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in records:
        lines.append(
            f"| {r.id} | {_cell(r.section_ref)} | {_cell(r.historical_assertion.statement)} | {_cell(_computed(r))} "
            f"| {r.verdict or 'ERROR'} | {r.expected_verdict} | {'yes' if r.matches_expectation else 'NO'} |"
        )
    bad = [r for r in records if not r.matches_expectation]
    lines += ["", f"{len(records) - len(bad)} of {len(records)} claims match their expected verdicts."]
    if bad:
        lines += ["", "## Diagnostics", ""]
        for r in bad:
            lines.append(f"- {r.id}: " + "; ".join(r.failures()))
    return "\n".join(lines) + "\n"


def render_json(records) -> str:
    doc = {
        "schema_version": 1,
        "claims": [r.to_dict() for r in records],
        "summary": {
            "total": len(records),
            "matching": sum(1 for r in records if r.matches_expectation),
            "mismatched": [r.id for r in records if not r.matches_expectation],
        },
    }
    return json.dumps(doc, indent=2) + "\n"


__all__ = [
    "EXIT_OK",
    "EXIT_MISMATCH",
    "EXIT_USAGE",
    "EXIT_NUMERIC",
    "Report",
    "run_report",
    "render_claim_markdown",
    "render_markdown",
    "render_json",
]
