"""Command-line front end.

Subcommands: params, binomials, count-s, order, verify, scan.  Exit codes:
0 success with all checks passing, 1 a mathematical check failed, 2 usage
error, 3 budget or size-cap exceeded.  Output in json/csv mode is
byte-identical across runs of the same argv (timings appear in text mode
only); unbounded integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .construction import binomial_family
from .counting import DEFAULT_ENUM_BUDGET, enumerate_S, theorem1_bound
from .errors import (BinordError, BoundsTooLarge, BudgetExceeded,
                     FormulaMismatch, SizeCapExceeded)
from .integers import DEFAULT_FACTOR_CAP
from .oracle import CSV_COLUMNS, exact_element_order, scan, verify_instance
from .parameters import build_spec

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _add_instance_args(parser, with_a=True):
    parser.add_argument("--q", type=int, required=True, help="base field prime")
    parser.add_argument("--m", type=int, required=True, help="extension degree")
    parser.add_argument("--b", type=int, default=1,
                        help="nonzero constant term (default 1)")
    if with_a:
        parser.add_argument("--a", type=int, default=None,
                            help="override the binomial constant a")


def _add_format_arg(parser):
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="text", help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binord",
        description="High-order elements in F_q[x]/(x^m - a): construction, "
                    "counting, exact orders, and verification scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print the derived instance parameters")
    _add_instance_args(p)
    _add_format_arg(p)

    p = sub.add_parser("binomials", help="print the conjugate binomial family")
    _add_instance_args(p)

    p = sub.add_parser("count-s", help="count the selection-vector set S and "
                                       "report the bound values")
    _add_instance_args(p)
    _add_format_arg(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="cross-check the count by explicit enumeration")
    p.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET)

    p = sub.add_parser("order", help="exact multiplicative order of theta + b")
    _add_instance_args(p)
    _add_format_arg(p)
    p.add_argument("--factor-cap", type=int, default=DEFAULT_FACTOR_CAP)

    p = sub.add_parser("verify", help="run every check on one instance")
    _add_instance_args(p)
    _add_format_arg(p)
    p.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--factor-cap", type=int, default=DEFAULT_FACTOR_CAP)

    p = sub.add_parser("scan", help="verify every instance for the given "
                                    "primes up to a degree bound")
    p.add_argument("--q", type=int, action="append", required=True,
                   dest="q_set", help="base field prime (repeatable)")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--b-rule", choices=("one", "all"), default="one")
    p.add_argument("--include-degenerate", action="store_true",
                   help="also verify instances with m | q - 1")
    _add_format_arg(p)
    p.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--factor-cap", type=int, default=DEFAULT_FACTOR_CAP)
    return parser


def _spec_text(spec) -> str:
    lines = [f"q={spec.q} m={spec.m} a={spec.a.value} b={spec.b.value}",
             f"e={spec.e} k={spec.k} l={spec.l} t={spec.t}",
             "exponent table (i: alpha_i, r_i):"]
    lines += [f"  {i}: alpha={alpha} r={r}"
              for i, (alpha, r) in enumerate(spec.exponent_table)]
    lines += [f"warning: {w}" for w in spec.warnings]
    return "\n".join(lines)


def cmd_params(args) -> int:
    spec = build_spec(args.q, args.m, b=args.b, a_override=args.a)
    if args.format == "json":
        print(_dump(spec.to_json_dict()))
    else:
        print(_spec_text(spec))
    return EXIT_OK


def cmd_binomials(args) -> int:
    spec = build_spec(args.q, args.m, b=args.b, a_override=args.a)
    for member in binomial_family(spec):
        elem = member.to_element(spec)
        print(f"i={member.i} j={member.j} elem={elem.canonical_text()}")
    return EXIT_OK


def cmd_count_s(args) -> int:
    spec = build_spec(args.q, args.m, b=args.b, a_override=args.a)
    report = theorem1_bound(spec.k, spec.l, spec.m)
    if args.exhaustive:
        listed = sum(1 for _ in enumerate_S(spec.k, spec.l, spec.m,
                                            budget=args.enum_budget))
        if listed != report.s_count:
            print(f"counting mismatch: enumeration found {listed}, "
                  f"dynamic programming found {report.s_count}",
                  file=sys.stderr)
            return EXIT_CHECK_FAILED
    if args.format == "json":
        print(_dump(report.count_s_json_dict()))
    else:
        print(f"k={report.k} l={report.l} case={report.case_id}")
        print(f"s_count={report.s_count}")
        print(f"theorem1_bound={report.theorem1_bound}")
        print(f"lemma5_floor={report.lemma5_floor}")
        print(f"lemma8_w={report.lemma8_w} lemma8_count={report.lemma8_count}")
        for flag in report.flags:
            print(f"flag: {flag}")
        if args.exhaustive:
            print("exhaustive enumeration agrees")
    return EXIT_OK


def cmd_order(args) -> int:
    spec = build_spec(args.q, args.m, b=args.b, a_override=args.a)
    order = exact_element_order(spec, spec.theta_plus_b(),
                                factor_cap=args.factor_cap)
    if args.format == "json":
        print(_dump({"q": spec.q, "m": spec.m, "a": spec.a.value,
                     "b": spec.b.value, "order": str(order)}))
    else:
        print(f"order of theta+{spec.b.value} in "
              f"F_{spec.q}[x]/(x^{spec.m}-{spec.a.value}): {order}")
    return EXIT_OK


def _report_text(report) -> str:
    lines = []
    if report.error is not None:
        return (f"q={report.q} m={report.m} b={report.b} "
                f"error: {report.error}")
    spec = report.spec
    lines.append(f"q={spec.q} m={spec.m} a={spec.a.value} b={spec.b.value} "
                 f"k={spec.k} l={spec.l} case={report.bound_report.case_id}")
    lines.append(f"exact_order={report.exact_order}")
    br = report.bound_report
    lines.append(f"s_count={br.s_count} theorem1_bound={br.theorem1_bound} "
                 f"lemma5_floor={br.lemma5_floor}")
    for name, value in report.checks.items():
        timing = report.timings.get(name)
        suffix = "" if timing is None else f"  [{timing:.3f}s]"
        lines.append(f"check {name}: {value}{suffix}")
    for flag in br.flags:
        lines.append(f"flag: {flag}")
    for warning in spec.warnings:
        lines.append(f"warning: {warning}")
    lines.append(f"all_checks_pass={report.all_checks_pass}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    report = verify_instance(args.q, args.m, args.b, a_override=args.a,
                             enum_budget=args.enum_budget,
                             factor_cap=args.factor_cap)
    if args.format == "json":
        print(_dump(report.to_json_dict()))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_COLUMNS)
        writer.writerow(report.csv_row())
    else:
        print(_report_text(report))
    return EXIT_OK if report.all_checks_pass else EXIT_CHECK_FAILED


def cmd_scan(args) -> int:
    reports = scan(args.q_set, args.m_max, args.b_rule,
                   include_degenerate=args.include_degenerate,
                   enum_budget=args.enum_budget, factor_cap=args.factor_cap)
    failed = budget_limited = False
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(CSV_COLUMNS)
    for report in reports:
        if args.format == "json":
            print(_dump(report.to_json_dict()))
        elif args.format == "csv":
            writer.writerow(report.csv_row())
        else:
            print(_report_text(report))
            print()
        if report.error is not None:
            budget_limited = True
        elif not report.all_checks_pass:
            failed = True
    if failed:
        return EXIT_CHECK_FAILED
    if budget_limited:
        return EXIT_BUDGET
    return EXIT_OK


_COMMANDS = {
    "params": cmd_params,
    "binomials": cmd_binomials,
    "count-s": cmd_count_s,
    "order": cmd_order,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (SizeCapExceeded, BudgetExceeded, BoundsTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FormulaMismatch as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except BinordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
