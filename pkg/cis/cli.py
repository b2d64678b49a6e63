#!/usr/bin/env python3
"""Command-line front end.

Usage:
    cis classify --type A --rank 5 --subset 2,4
    cis case B7(3) --format json --out b7_3.json
    cis case --type F --rank 4 --subset 4 --certificate
    cis case E6(3) --format csv --table
    cis verify --scope tables

Exit codes: 0 success, 1 failed verify checks, 2 usage or invalid algebra,
3 excluded case, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import List, Optional

from .parabolic.cores import ParabolicSpec, build_case, classify_step
from .report import build_case_report, classification_dict, render_csv, render_json, render_table_csv, render_text
from .rootsys.cores import AlgebraType
from .utils.errors import ConsistencyError, ExcludedCaseError, InvalidAlgebraError, UnsupportedCaseError
from .verify import SCOPES, run_scope

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_EXCLUDED = 3
EXIT_INTERNAL = 4


def _parse_subset(text: str) -> frozenset[int]:
    try:
        return frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InvalidAlgebraError(f"Bad subset {text!r}; expected e.g. 2,4") from None


def _spec_from_args(args: argparse.Namespace) -> ParabolicSpec:
    label = getattr(args, "label", None)
    if label:
        return ParabolicSpec.parse(label)
    if args.type is None or args.rank is None or args.subset is None:
        raise InvalidAlgebraError("Give a case label such as B7(3) or all of --type, --rank and --subset")
    return ParabolicSpec(AlgebraType.parse(f"{args.type}{args.rank}"), _parse_subset(args.subset))


def _use_color(args: argparse.Namespace) -> bool:
    return os.environ.get("CIS_COLOR", "0") == "1" and args.out is None and sys.stdout.isatty()


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    cls = classify_step(spec)
    if args.format == "json":
        _emit(json.dumps({"label": str(spec), **classification_dict(cls)}, ensure_ascii=False) + "\n", args.out)
    else:
        _emit(f"{spec}: {cls.display()} (dim [n, n] = {cls.dim_nn})\n", args.out)
    return EXIT_OK


def _cmd_case(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    case = build_case(spec)
    if args.table:
        if args.format != "csv":
            raise InvalidAlgebraError("--table needs --format csv")
        _emit(render_table_csv(case.model), args.out)
        return EXIT_OK
    report = build_case_report(case, certificate=args.certificate)
    match args.format:
        case "json":
            text = render_json(report)
        case "csv":
            text = render_csv([report])
        case _:
            text = render_text(report, color=_use_color(args))
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    specs = None
    if args.cases:
        specs = [ParabolicSpec.parse(label) for label in args.cases.split(";") if label.strip()]
    results = run_scope(args.scope, specs)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {"scope": args.scope, "passed": len(results) - len(failed), "failed": len(failed), "results": [asdict(r) for r in results]}
        _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'} [{r.suite}] {r.name}" + (f"  ({r.detail})" if r.detail and not r.passed else "") for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAILED if failed else EXIT_OK


def _add_spec_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="Cartan family, A-G")
    p.add_argument("--rank", type=int, help="Rank of the simple algebra")
    p.add_argument("--subset", help="Comma-separated 1-based simple roots, e.g. 2,4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cis", description="Conformally invariant systems for quasi-Heisenberg parabolics")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Nilpotency step of a parabolic nilradical")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, help="Write to a file instead of stdout")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("case", help="Full report for one quasi-Heisenberg maximal parabolic")
    p.add_argument("label", nargs="?", help="Case label such as B7(3)")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--table", action="store_true", help="Dump the structure constants as CSV rows (alpha, beta, a, b)")
    p.add_argument("--certificate", action="store_true", help="Also run the conformal-invariance certificate")
    p.add_argument("--out", type=Path, help="Write to a file instead of stdout")
    p.set_defaults(func=_cmd_case)

    p = sub.add_parser("verify", help="Run the acceptance suites")
    p.add_argument("--scope", choices=SCOPES, required=True)
    p.add_argument("--cases", help="Semicolon-separated case labels instead of the default set")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, help="Write to a file instead of stdout")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except ExcludedCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXCLUDED
    except (InvalidAlgebraError, UnsupportedCaseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
