"""Command line entry point ``slice``.

    slice run job.cfg [--output report.json] [--format json|text|latex]
    slice verify [fixture ...] [--format text|json]
    slice latex report.json section[.key]

Exit status: 0 when every check passes, 1 when a check fails, 2 on a
configuration or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..errors import SliceError
from .config import load_config
from .golden import verify_fixtures
from .latex import emit_latex, select
from .pipeline import run

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _report_latex(report) -> str:
    out = []
    for name, section in report.sections.items():
        try:
            out.append(f"% {name}\n{emit_latex(section)}")
        except ValueError:
            continue
    return "\n".join(out) + "\n"


def cmd_run(args) -> int:
    config = load_config(args.config)
    report = run(config)
    fmt = args.format or config.format
    if fmt == "json":
        text = report.to_json()
    elif fmt == "text":
        text = report.to_text()
    else:
        text = _report_latex(report)
    _emit(text, args.output or config.output)
    return report.exit_code


def cmd_verify(args) -> int:
    summary = verify_fixtures(args.fixtures)
    _emit(summary.to_json() if args.format == "json" else summary.to_text(), args.output)
    return EXIT_PASS if summary.passed else EXIT_FAIL


def cmd_latex(args) -> int:
    document = json.loads(Path(args.report).read_text())
    try:
        value = select(document, args.section)
    except KeyError:
        raise SliceError(f"report has no section {args.section!r}") from None
    _emit(emit_latex(value) + "\n", args.output)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slice", description="Exact transverse Poisson structures on nilpotent slices.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "latex", "text"), help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="run a job file")
    p.add_argument("config")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", parents=[common], help="recompute shipped fixtures and diff against pinned values")
    p.add_argument("fixtures", nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("latex", parents=[common], help="render a report section as LaTeX")
    p.add_argument("report")
    p.add_argument("section")
    p.set_defaults(func=cmd_latex)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SliceError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
