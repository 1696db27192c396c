"""Command-line entry point: ``galtypes`` / ``python -m galtypes``."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .disc_bound import compute_bound_chain
from .exceptions import GaltypesError, UnsupportedDegreeError
from .galois_id import MODES, determine
from .parsing import parse_poly
from .perm_groups import cycle_type_set, transitive_subgroups
from .report import (
    COLOR_ENV,
    NO_TIMESTAMP_ENV,
    bound_to_dict,
    bound_to_text,
    color_enabled,
    report_to_dict,
    timestamps_disabled,
    to_csv,
    to_json,
    to_text,
)
from .tables import SUPPORTED_DEGREES, TABLE_VERSION, row_by_name
from .verification import run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_DEGREE = 3

EPILOG = f"""\
environment:
  {NO_TIMESTAMP_ENV}=1   omit the timestamp field from JSON reports (same as --no-timestamp)
  {COLOR_ENV}=1          colorize the verdict line of text reports

exit codes: 0 success, 1 verification failure, 2 input error, 3 unsupported degree
"""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so run_cli can return codes."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError()


class _UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 2:
        raise argparse.ArgumentTypeError("must be >= 2")
    return v


def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.RawDescriptionHelpFormatter
    p = _Parser(prog="galtypes", description="Galois groups of small-degree polynomials "
                "from factorization types modulo primes.", epilog=EPILOG, formatter_class=fmt)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="scan primes and determine the Galois group",
                       epilog=EPILOG, formatter_class=fmt)
    a.add_argument("poly", help='expression such as "x^3-2" or descending coefficients "1,0,0,-2"')
    a.add_argument("--prime-limit", type=_positive_int, default=1000, metavar="N")
    a.add_argument("--mode", choices=MODES, default="strict")
    a.add_argument("--emit", choices=("json", "csv", "text"), default="text")
    a.add_argument("--frequencies", action="store_true",
                   help="include the densities predicted by a conclusive group")
    a.add_argument("--no-disc-refinement", action="store_true",
                   help="do not use the square-discriminant tie-break")
    a.add_argument("--early-exit", action="store_true",
                   help="stop at the first prime that leaves a single candidate")
    a.add_argument("--with-bound", action="store_true", help="attach the discriminant bound chain")
    a.add_argument("--A", type=_fraction, default=None, dest="A", help="exponent A in the prime bound")
    a.add_argument("--jobs", type=int, default=1, help="joblib workers for the prime scan")
    a.add_argument("--no-timestamp", action="store_true")
    a.add_argument("--out", type=Path, metavar="FILE", help="write the report here instead of stdout")

    t = sub.add_parser("tables", help="cycle-type sets of transitive groups, computed from scratch",
                       epilog=EPILOG, formatter_class=fmt)
    t.add_argument("--degree", type=int, choices=SUPPORTED_DEGREES)
    t.add_argument("--emit", choices=("json", "text"), default="text")
    t.add_argument("--out", type=Path, metavar="FILE")

    v = sub.add_parser("verify-group-theory", help="run the exhaustive group-theory checks",
                       epilog=EPILOG, formatter_class=fmt)
    v.add_argument("--degree-max", type=int, choices=(4, 5), default=4)

    b = sub.add_parser("bound", help="discriminant bound chain", epilog=EPILOG, formatter_class=fmt)
    b.add_argument("poly")
    b.add_argument("--A", type=_fraction, default=None, dest="A")
    b.add_argument("--emit", choices=("json", "text"), default="text")
    b.add_argument("--out", type=Path, metavar="FILE")
    return p


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _analyze(args) -> int:
    c = parse_poly(args.poly)
    rep = determine(c, args.prime_limit, mode=args.mode, disc_refinement=not args.no_disc_refinement,
                    early_exit=args.early_exit, n_jobs=args.jobs)
    bound = compute_bound_chain(c, args.A) if args.with_bound or args.A is not None else None
    if args.emit == "json":
        stamp = not (args.no_timestamp or timestamps_disabled())
        text = to_json(report_to_dict(rep, bound, with_expected=args.frequencies, timestamp=stamp))
    elif args.emit == "csv":
        text = to_csv(rep)
    else:
        text = to_text(rep, bound, with_expected=args.frequencies,
                       color=color_enabled() and args.out is None)
    _write(text, args.out)
    return EXIT_OK


def _tables(args) -> int:
    degrees = [args.degree] if args.degree else list(SUPPORTED_DEGREES)
    data = {"version": TABLE_VERSION, "degrees": {}}
    lines = []
    mismatches = 0
    for n in degrees:
        rows = []
        lines.append(f"degree {n}")
        for G in transitive_subgroups(n):
            types = sorted(cycle_type_set(G), key=lambda t: (-len(t), t))
            agrees = frozenset(types) == row_by_name(n, G.name).types
            mismatches += not agrees
            rows.append({"name": G.name, "order": G.order, "types": [list(t) for t in types],
                         "matches_embedded": agrees})
            mark = "" if agrees else "   MISMATCH with embedded table"
            lines.append(f"  {G.name:<8} order {G.order:>3}  {' '.join(repr(t) for t in types)}{mark}")
        data["degrees"][str(n)] = rows
    text = to_json(data) if args.emit == "json" else "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_FAILED if mismatches else EXIT_OK


def _verify(args) -> int:
    failed = 0
    for rep in run_suite(args.degree_max):
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status}  {rep.name}: {rep.checks} checks over {rep.details.get('runs', 0)} runs")
        for f in rep.failures[:5]:
            print(f"      {f}")
        failed += not rep.passed
    return EXIT_FAILED if failed else EXIT_OK


def _bound(args) -> int:
    b = compute_bound_chain(parse_poly(args.poly), args.A)
    text = to_json(bound_to_dict(b)) if args.emit == "json" else bound_to_text(b) + "\n"
    _write(text, args.out)
    return EXIT_OK


_COMMANDS = {"analyze": _analyze, "tables": _tables, "verify-group-theory": _verify, "bound": _bound}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_INPUT
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UnsupportedDegreeError as e:
        print(f"galtypes: unsupported degree: {e}", file=sys.stderr)
        return EXIT_DEGREE
    except (GaltypesError, ValueError, OSError) as e:
        print(f"galtypes: error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())
