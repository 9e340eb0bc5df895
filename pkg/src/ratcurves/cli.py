"""Command-line interface: classify, region, sweep, verify, examples."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classifier import classify
from .lattice import ParamError, validate_params
from .oracle import verify_grid, verify_paper_fixtures
from .plot import render_region
from .report import emit_inventory, emit_sweep

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def parse_range(text: str) -> range:
    """Parse ``A..B`` (inclusive) or a single integer ``A``."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; expected A..B") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: {hi} < {lo}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ratcurves",
        description="Irreducible components of the space of degree-k rational curves "
        "on the moduli space of rank-2 bundles with odd determinant on a genus-g curve.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="list the components for one (g, k)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", type=Path)
    p.add_argument("--figure", type=Path, help="also write a matplotlib picture of the region")

    p = sub.add_parser("region", help="draw the (a, e) lattice and the component region")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("sweep", help="classify every (g, k) in a grid")
    p.add_argument("--g", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--k", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("verify", help="cross-check the classifier against the boundary curves")
    p.add_argument("--g", type=parse_range, default=range(2, 21), metavar="A..B")
    p.add_argument("--k", type=parse_range, default=range(1, 101), metavar="A..B")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("table", "json"), default="table")

    sub.add_parser("examples", help="re-run the published worked examples")
    return parser


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="")


def _check_grid(gs, ks):
    for g in (gs[0], gs[-1]):
        for k in (ks[0], ks[-1]):
            validate_params(g, k)


def _verify_text(report, fmt):
    if fmt == "json":
        doc = {
            "cells": len(report.grid),
            "mismatches": report.mismatches,
            "identity_failures": report.identity_failures,
            "passed": report.passed,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = [
        f"cells checked: {len(report.grid)}",
        f"region mismatches: {len(report.mismatches)}",
        f"identity failures: {len(report.identity_failures)}",
    ]
    for m in report.mismatches:
        lines.append(
            f"  mismatch g={m['cell'][0]} k={m['cell'][1]} pair={m['pair']}: "
            f"direct={m['direct_verdict']} geometric={m['geometric_verdict']}"
        )
    for f in report.identity_failures:
        lines.append(f"  identity {f['identity']} g={f['cell'][0]} k={f['cell'][1]}: {f['detail']}")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def _examples_text(report):
    width = max(len(f["name"]) for f in report.fixtures)
    lines = []
    for f in report.fixtures:
        status = "pass" if f["passed"] else "FAIL"
        extra = f"  {f['detail']}" if f["detail"] else ""
        lines.append(f"{status}  {f['name'].ljust(width)}{extra}".rstrip())
    n_ok = sum(f["passed"] for f in report.fixtures)
    lines.append(f"{n_ok}/{len(report.fixtures)} fixtures passed")
    return "\n".join(lines) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "classify":
            inventory = classify(args.g, args.k)
            _write(emit_inventory(inventory, args.format), args.out)
            if args.figure is not None:
                from .figures import save_region_figure

                save_region_figure(args.g, args.k, args.figure)
        elif args.command == "region":
            _write(render_region(args.g, args.k, args.format), args.out)
        elif args.command == "sweep":
            _check_grid(args.g, args.k)
            _write(emit_sweep(args.g, args.k, args.format), args.out)
        elif args.command == "verify":
            _check_grid(args.g, args.k)
            report = verify_grid(args.g, args.k, workers=max(1, args.jobs))
            sys.stdout.write(_verify_text(report, args.format))
            return EXIT_OK if report.passed else EXIT_FAILED
        elif args.command == "examples":
            report = verify_paper_fixtures()
            sys.stdout.write(_examples_text(report))
            return EXIT_OK if report.passed else EXIT_FAILED
    except (ParamError, ValueError) as exc:
        print(f"ratcurves: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run())
