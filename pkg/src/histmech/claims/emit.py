"""Series emission as CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys

from .config import RunConfig
from .registry import REGISTRY, Registry, Series

SCHEMA_VERSION = 1
EMIT_FORMATS = ("csv", "json")


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_cell(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def render_csv(series: Series) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(series.columns)
    for row in series.rows:
        w.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def render_json(claim_id: str, series: Series) -> str:
    doc = {
        "claim_id": claim_id,
        "schema_version": SCHEMA_VERSION,
        "columns": list(series.columns),
        "rows": [[_json_cell(v) for v in row] for row in series.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def render(claim_id: str, fmt: str, cfg: RunConfig | None = None, registry: Registry = REGISTRY) -> str:
    if fmt not in EMIT_FORMATS:
        raise ValueError(f"format must be one of {', '.join(EMIT_FORMATS)}")
    series = registry.series(claim_id, cfg)
    return render_csv(series) if fmt == "csv" else render_json(claim_id, series)


def emit(claim_id: str, fmt: str, path: str | os.PathLike | None, cfg: RunConfig | None = None, registry: Registry = REGISTRY) -> str:
    """Write the claim's series to ``path`` (stdout for None or "-") and return the text."""
    text = render(claim_id, fmt, cfg, registry)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


__all__ = ["SCHEMA_VERSION", "EMIT_FORMATS", "render_csv", "render_json", "render", "emit"]
