"""Command-line front end.

    tribsed seq --name tribonacci --from 0 --to 10 --format csv
    tribsed sedenion --params 0,1,1,1,1,1 --from -3 --to 3
    tribsed roots --name narayana
    tribsed gf --name perrin --count 11
    tribsed verify --suite all --name tribonacci --format json
    tribsed multable --level 3
    tribsed opcount --level 4

Exact values are written as decimal integers or "p/q" strings; in JSON they
are always strings so big integers survive the round trip.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from fractions import Fraction
from typing import TextIO

from . import cdalg
from .sedseq import gf_coefficients, sed_norm_direct, sed_term
from .triseq import (
    SEQUENCE_NAMES,
    SequenceError,
    TriParams,
    cubic_roots,
    named_params,
    seq_terms,
)
from .verify import SUITES, Selection, fmt_exact, run_suite, summarize

TOLERANCE_ENV = "SEDSEQ_TOLERANCE"

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


class CliError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise CliError(f"not a rational 'p/q' or integer: {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise CliError(f"zero denominator in {text!r}") from None


def parse_params(text: str) -> TriParams:
    parts = text.split(",")
    if len(parts) != 6:
        raise CliError("--params needs six values v0,v1,v2,r,s,t")
    return TriParams(*(parse_rational(p) for p in parts))


def _selection(args, required: bool) -> list[Selection] | None:
    if args.name is not None:
        if args.name not in SEQUENCE_NAMES:
            raise CliError(
                f"unknown sequence {args.name!r}; valid names: {', '.join(SEQUENCE_NAMES)}"
            )
        return [Selection(args.name, named_params(args.name))]
    if args.params is not None:
        p = parse_params(args.params)
        return [Selection(str(p), p)]
    if required:
        raise CliError("give a sequence with --name or --params")
    return None


def _range(args) -> tuple[int, int]:
    if args.lo > args.hi:
        raise CliError(f"--from {args.lo} is greater than --to {args.hi}")
    return args.lo, args.hi


def _tolerance(args) -> float | None:
    if getattr(args, "tolerance", None) is not None:
        tol = args.tolerance
    elif os.environ.get(TOLERANCE_ENV):
        try:
            tol = float(os.environ[TOLERANCE_ENV])
        except ValueError:
            raise CliError(f"{TOLERANCE_ENV} is not a number: {os.environ[TOLERANCE_ENV]!r}")
    else:
        return None
    if not tol > 0:
        raise CliError("tolerance must be positive")
    return tol


def _config(args, **extra) -> dict:
    cfg = {"subcommand": args.command}
    for key in ("name", "params", "lo", "hi", "format", "suite", "level", "count", "tolerance"):
        if hasattr(args, key) and getattr(args, key) is not None:
            cfg[{"lo": "from", "hi": "to"}.get(key, key)] = getattr(args, key)
    cfg.update(extra)
    return cfg


def _emit(out: TextIO, fmt: str, header: list[str], rows: list[list[str]], config: dict,
          records: list[dict], summary: dict | None = None) -> None:
    if fmt == "json":
        body = {
            "config": config,
            "records": records,
            "summary": summary or {"passed": 0, "failed": 0, "skipped": 0, "records": len(records)},
        }
        json.dump(body, out, indent=2, ensure_ascii=False)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def run_seq(args, out: TextIO) -> int:
    (sel,) = _selection(args, required=True)
    lo, hi = _range(args)
    values = seq_terms(sel.params, lo, hi)
    rows = [[str(n), fmt_exact(v)] for n, v in zip(range(lo, hi + 1), values)]
    records = [{"n": n, "value": v} for n, v in ((int(a), b) for a, b in rows)]
    _emit(out, args.format, ["n", "value"], rows, _config(args, sequence=str(sel.params)), records)
    return 0


def run_sedenion(args, out: TextIO) -> int:
    (sel,) = _selection(args, required=True)
    lo, hi = _range(args)
    rows, records = [], []
    for n in range(lo, hi + 1):
        term = sed_term(sel.params, n)
        coeffs = [fmt_exact(c) for c in term.coeffs]
        norm = fmt_exact(sed_norm_direct(term))
        rows.append([str(n), *coeffs, norm])
        records.append({"n": n, "coeffs": coeffs, "norm_sq": norm})
    header = ["n", *(f"e{i}" for i in range(16)), "norm_sq"]
    _emit(out, args.format, header, rows, _config(args, sequence=str(sel.params)), records)
    return 0


def run_gf(args, out: TextIO) -> int:
    (sel,) = _selection(args, required=True)
    if args.count < 1:
        raise CliError("--count must be at least 1")
    rows, records = [], []
    for term in gf_coefficients(sel.params, args.count):
        coeffs = [fmt_exact(c) for c in term.coeffs]
        rows.append([str(term.n), *coeffs])
        records.append({"order": term.n, "coeffs": coeffs})
    header = ["order", *(f"e{i}" for i in range(16))]
    _emit(out, args.format, header, rows, _config(args, sequence=str(sel.params)), records)
    return 0


def run_roots(args, out: TextIO) -> int:
    (sel,) = _selection(args, required=True)
    rd = cubic_roots(sel.params)
    quantities = [
        ("delta", fmt_exact(rd.delta)),
        ("A", repr(rd.bigA)),
        ("B", repr(rd.bigB)),
        ("alpha", repr(rd.alpha)),
        ("beta", repr(rd.beta)),
        ("gamma", repr(rd.gamma)),
        ("P", repr(rd.p)),
        ("Q", repr(rd.q)),
        ("R", repr(rd.rr)),
    ]
    records = [{"quantity": q, "value": v} for q, v in quantities]
    _emit(out, args.format, ["quantity", "value"], [list(q) for q in quantities],
          _config(args, sequence=str(sel.params)), records)
    return 0


def run_verify(args, out: TextIO) -> int:
    selection = _selection(args, required=False)
    tol = _tolerance(args)
    try:
        checks = run_suite(args.suite, selection, tol)
    except KeyError as exc:
        raise CliError(exc.args[0]) from None
    summary = summarize(checks)
    if args.format == "text":
        for c in checks:
            out.write(c.line() + "\n")
        out.write(f"summary: {summary['passed']} passed, {summary['failed']} failed, "
                  f"{summary['skipped']} skipped\n")
    else:
        rows = [[c.suite, c.name, c.status, c.residual, c.detail] for c in checks]
        _emit(out, args.format, ["suite", "check", "status", "residual", "detail"], rows,
              _config(args, tolerance=tol), [c.as_dict() for c in checks], summary)
    return 0 if summary["failed"] == 0 else 1


def run_multable(args, out: TextIO) -> int:
    cells = cdalg.format_mul_table(args.level)
    if args.format == "text":
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            out.write(" ".join(c.rjust(width) for c in row).rstrip() + "\n")
        return 0
    n = len(cells)
    rows = [[f"e{i}", *row] for i, row in enumerate(cells)]
    records = [{"row": f"e{i}", "cells": row} for i, row in enumerate(cells)]
    _emit(out, args.format, ["row", *(f"e{j}" for j in range(n))], rows, _config(args), records)
    return 0


def run_opcount(args, out: TextIO) -> int:
    ops = cdalg.cd_count_naive_ops(args.level)
    if args.format == "json":
        record = {"level": args.level, "multiplications": ops.multiplications,
                  "additions": ops.additions}
        _emit(out, "json", [], [], _config(args), [record])
    else:
        out.write(f"{ops}\n")
    return 0


def _level(text: str) -> int:
    try:
        level = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"level must be an integer, got {text!r}")
    if not 0 <= level <= cdalg.MAX_LEVEL:
        raise argparse.ArgumentTypeError(f"level must be in 0..{cdalg.MAX_LEVEL}, got {level}")
    return level


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribsed",
        description="Cayley-Dickson algebras and generalized Tribonacci sedenions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def selector(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--name", help=f"named sequence ({', '.join(SEQUENCE_NAMES)})")
        g.add_argument("--params", help="explicit v0,v1,v2,r,s,t as integers or p/q")

    def index_range(p):
        p.add_argument("--from", dest="lo", type=int, default=0)
        p.add_argument("--to", dest="hi", type=int, default=10)

    p = sub.add_parser("seq", help="scalar sequence values")
    selector(p), index_range(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=run_seq)

    p = sub.add_parser("sedenion", help="sedenion terms V^_n and their norms")
    selector(p), index_range(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=run_sedenion)

    p = sub.add_parser("roots", help="characteristic roots and Binet coefficients")
    selector(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=run_roots)

    p = sub.add_parser("gf", help="generating-function power-series coefficients")
    selector(p)
    p.add_argument("--count", type=int, default=11)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=run_gf)

    p = sub.add_parser("verify", help="run verification suites")
    selector(p)
    p.add_argument("--suite", default="all", help=f"all, {', '.join(SUITES)}")
    p.add_argument("--tolerance", type=_positive_float, default=None,
                   help=f"float tolerance override (also ${TOLERANCE_ENV})")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("multable", help="basis multiplication table")
    p.add_argument("--level", type=_level, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=run_multable)

    p = sub.add_parser("opcount", help="scalar operations of one naive product")
    p.add_argument("--level", type=_level, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=run_opcount)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CliError, SequenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
