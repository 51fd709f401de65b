"""Command-line interface: ``cycledeg degree | table | verify``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 on bad usage.
Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time

from . import calculus as deg
from .errors import RouteDisagreement
from .report import FAIL, RunReport, record
from .verify import ENUMERATION_SUITES, SUITES, run_suite, table_records

log = logging.getLogger("cycledeg")

ENUMERATION_CAP = 10
CLOSED_CAP = 200
DEGREE_ROUTES = ("closed", "recurrence", "combinatorial", "all")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cycledeg",
        description="Exact degree of the inverse n-cycle variety and checks of the identities behind it.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument(
            "--cap",
            type=int,
            default=ENUMERATION_CAP,
            help=f"largest n for exhaustive enumeration (default {ENUMERATION_CAP})",
        )
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for independent cells")

    d = sub.add_parser("degree", help="degree for one n by one or all routes")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--route", choices=DEGREE_ROUTES, default="all")
    common(d)

    t = sub.add_parser("table", help="triangle of F or H values, or the degree sequence")
    t.add_argument("kind", choices=("F", "H", "degree"))
    t.add_argument("--n-max", type=int, required=True)
    common(t)

    v = sub.add_parser("verify", help="run an identity or property suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n-max", type=int, default=7)
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--seed", type=int, default=0)
    common(v)
    return p


def cmd_degree(args) -> RunReport:
    n = args.n
    if n < 3:
        raise UsageError("--n must be at least 3")
    if n > CLOSED_CAP:
        raise UsageError(f"--n must be at most {CLOSED_CAP}")
    if args.route == "all":
        routes = ("closed", "recurrence") + (("combinatorial",) if n <= args.cap else ())
    else:
        routes = (args.route,)
    if "combinatorial" in routes and n > args.cap:
        raise UsageError(f"the combinatorial route enumerates graphs; n={n} exceeds the cap {args.cap}")
    report = RunReport("degree", {"n": n, "route": args.route, "routes": list(routes)})
    expected = deg.q(n)
    values = deg.degree_routes(n, routes)
    for route, value in values.items():
        report.records.append(record("degree", {"n": n, "route": route}, expected, value))
    if len(routes) > 1:
        try:
            deg.degree(n, routes)
            agree = True
        except RouteDisagreement as exc:
            log.error("%s", exc)
            agree = False
        report.records.append(record("routes-agree", {"n": n}, True, agree))
    return report


def cmd_table(args) -> RunReport:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    if args.n_max > CLOSED_CAP:
        raise UsageError(f"--n-max must be at most {CLOSED_CAP}")
    report = RunReport("table", {"kind": args.kind, "n_max": args.n_max, "combinatorial_cap": args.cap})
    report.records = table_records(args.kind, args.n_max, combinatorial_cap=args.cap)
    return report


def cmd_verify(args) -> RunReport:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    enumerating = args.suite == "all" or args.suite in ENUMERATION_SUITES
    limit = args.cap if enumerating else CLOSED_CAP
    if args.n_max > limit:
        raise UsageError(f"--n-max {args.n_max} exceeds the cap {limit} for suite {args.suite}")
    if args.samples < 1 or args.jobs < 1:
        raise UsageError("--samples and --jobs must be positive")
    params = {"suite": args.suite, "n_max": args.n_max, "samples": args.samples, "seed": args.seed, "cap": args.cap}
    report = RunReport("verify", params)
    report.records = run_suite(args.suite, args.n_max, args.samples, args.seed, jobs=args.jobs, cap=args.cap)
    for rec in report.records:
        if rec["status"] == FAIL:
            log.error("failed: %s %s", rec["name"], rec["inputs"])
    return report


COMMANDS = {"degree": cmd_degree, "table": cmd_table, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cycledeg: error: {exc}", file=sys.stderr)
        return 2
    report.wall_time = time.perf_counter() - start
    out = report.render(args.format)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
