"""Command-line entry point: ``histmech list|run|emit|report``."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .claims import REGISTRY, load_config
from .claims.emit import EMIT_FORMATS, emit
from .claims.report import EXIT_MISMATCH, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, render_claim_markdown, run_report
from .errors import ConfigError, NoDataError, NotFoundError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="histmech", description="Evaluate historical quantitative claims against modern reconstructions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value configuration file (default: $HISTMECH_CONFIG)")

    sub.add_parser("list", help="list registered claims")

    run = sub.add_parser("run", parents=[common], help="evaluate one claim")
    run.add_argument("claim_id")
    run.add_argument("--format", choices=("md", "json"))

    em = sub.add_parser("emit", parents=[common], help="write a claim's data series")
    em.add_argument("claim_id")
    em.add_argument("--format", choices=EMIT_FORMATS, required=True)
    em.add_argument("--out", default="-", help="output path, '-' for stdout")

    rep = sub.add_parser("report", parents=[common], help="evaluate every claim")
    rep.add_argument("--format", choices=("md", "json"))
    rep.add_argument("--parallel", type=int)
    rep.add_argument("--out", help="output path, '-' for stdout")
    return p


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _exit_for(record) -> int:
    if record.error is not None:
        return EXIT_NUMERIC
    return EXIT_OK if record.matches_expectation else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None), set(REGISTRY.ids))
        fmt = getattr(args, "format", None)
        if args.command == "report":
            overrides = {}
            if fmt:
                overrides["format"] = fmt
            if args.parallel is not None:
                overrides["parallel"] = args.parallel
            if args.out is not None:
                overrides["output"] = args.out
            cfg = dataclasses.replace(cfg, **overrides)
            rep = run_report(cfg)
            _write(rep.render(cfg.format), cfg.output)
            for r in rep.errors + rep.mismatches:
                print(f"{r.id}: {'; '.join(r.failures())}", file=sys.stderr)
            return rep.exit_code
        if args.command == "list":
            for r in REGISTRY.list_claims():
                print(f"{r.id}\t{r.expected_verdict}\t{r.title}")
            return EXIT_OK
        if args.command == "run":
            rec = REGISTRY.run(args.claim_id, cfg)
            if (fmt or cfg.format) == "json":
                sys.stdout.write(json.dumps(rec.to_dict(), indent=2) + "\n")
            else:
                sys.stdout.write(render_claim_markdown(rec))
            return _exit_for(rec)
        emit(args.claim_id, args.format, args.out, cfg)
        return EXIT_OK
    except (NotFoundError, ConfigError, NoDataError) as exc:
        print(f"histmech: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
