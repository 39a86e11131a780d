"""
Apex TK5 Toolkit - Command Line Interface

Checks 5-connected nonplanar apex graphs, runs the K4-minus / TK5
construction, verifies certificates, prints discharging ledgers and
generates seeded test instances.

Run with: python cli.py <command> --help
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import database as db
from errors import GraphFormatError, InfeasibleInstanceError, InvalidInputError
from services.check_service import CheckService
from services.generator_service import GeneratorService
from utils.constants import (
    APP_NAME,
    APP_VERSION,
    DEFAULT_JOBS,
    EXIT_HYPOTHESIS_FAILURE,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    FORMAT_ADJACENCY,
    FORMAT_GRAPH6,
    GENERATOR_KINDS,
    GRAPH_FORMATS,
    LOG_FORMAT,
    LOG_LEVEL,
)
from utils.graph_io import read_graph, to_adjacency, to_graph6
from utils.validators import parse_boundary

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


# ============================================================================
# Commands
# ============================================================================

def cmd_check(args: argparse.Namespace) -> int:
    """Check each input file; the exit status is the worst per-file code."""
    run = partial(CheckService.check_file, fmt=args.format, run_construction=args.construct,
                  force_wheel_route=args.force_wheel_route, apex=args.apex)
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, args.files))
    else:
        reports = [run(path) for path in args.files]

    if args.db:
        db.init_database(args.db)
    for report in reports:
        if args.db:
            db.record_run(report, args.db)
        if args.json:
            print(report.model_dump_json(indent=2))
        else:
            print(f"{report.name}: {report.message}")
            if report.certificate is not None and args.show_certificate:
                print(report.certificate.to_json())
    return max(report.exit_code for report in reports)


def cmd_verify(args: argparse.Namespace) -> int:
    """Verify a certificate file against a graph file."""
    try:
        g = read_graph(args.graph, args.format)
        with open(args.certificate, encoding="utf-8") as handle:
            text = handle.read()
    except (GraphFormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR

    code, problems = CheckService.verify(g, text)
    for problem in problems:
        print(problem)
    if code == EXIT_OK:
        print("certificate valid")
    return code


def cmd_discharge(args: argparse.Namespace) -> int:
    """Print the charge ledger of a plane graph with a 4-vertex boundary."""
    ok, error, boundary = parse_boundary(args.boundary)
    if not ok:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        g = read_graph(args.graph, args.format)
    except (GraphFormatError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        report = CheckService.discharge(g, boundary)
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS_FAILURE

    if args.faces:
        print(report.embedding.dump())
    print(report.ledger.dump())
    print(f"nonpositive: {report.nonpositivity}")
    account = report.outer_account
    print(f"outer face: predicted {account.predicted}, actual {account.actual}")
    if report.ledger.gaps:
        print(f"uncovered vertices: {' '.join(str(v) for v in report.ledger.gaps)}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    """Emit a seeded instance."""
    try:
        instance = GeneratorService.generate(args.kind, args.size, args.seed, args.min_degree)
    except (InfeasibleInstanceError, InvalidInputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS_FAILURE
    if args.format == FORMAT_ADJACENCY:
        print(to_adjacency(instance.graph))
    else:
        print(to_graph6(instance.graph))
    return EXIT_OK


def cmd_history(args: argparse.Namespace) -> int:
    """List recent runs and per-outcome counts from the run log."""
    db.init_database(args.db)
    runs = db.get_runs(limit=args.limit, outcome=args.outcome, path=args.db)
    if args.json:
        print(json.dumps([run.model_dump() for run in runs], indent=2))
        return EXIT_OK
    for run in runs:
        print(f"{run.id}\t{run.created_at}\t{run.outcome}\t{run.exit_code}\t{run.name}")
    counts = db.get_outcome_counts(args.db)
    print(", ".join(f"{outcome}: {count}" for outcome, count in counts.items()) or "no runs")
    return EXIT_OK


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tk5", description=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check hypotheses and optionally construct")
    check.add_argument("files", nargs="+")
    check.add_argument("--construct", action="store_true", help="run the construction")
    check.add_argument("--force-wheel-route", action="store_true",
                       help="build the TK5 through a short wheel even if K4- is present")
    check.add_argument("--apex", type=int, default=None)
    check.add_argument("--format", choices=GRAPH_FORMATS, default=None)
    check.add_argument("--json", action="store_true")
    check.add_argument("--show-certificate", action="store_true")
    check.add_argument("--jobs", type=int, default=DEFAULT_JOBS)
    check.add_argument("--db", default=None, help="record reports in this run log")
    check.set_defaults(handler=cmd_check)

    verify = sub.add_parser("verify", help="verify a TK5 certificate")
    verify.add_argument("graph")
    verify.add_argument("certificate")
    verify.add_argument("--format", choices=GRAPH_FORMATS, default=None)
    verify.set_defaults(handler=cmd_verify)

    discharge = sub.add_parser("discharge", help="print the charge ledger of a plane graph")
    discharge.add_argument("graph")
    discharge.add_argument("--boundary", required=True, help="four comma-separated vertices")
    discharge.add_argument("--format", choices=GRAPH_FORMATS, default=None)
    discharge.add_argument("--faces", action="store_true", help="also print the face list")
    discharge.set_defaults(handler=cmd_discharge)

    gen = sub.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("kind", choices=GENERATOR_KINDS)
    gen.add_argument("--size", type=int, required=True, help="vertices of the emitted graph")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--min-degree", type=int, choices=(4, 5), default=4)
    gen.add_argument("--format", choices=GRAPH_FORMATS, default=FORMAT_GRAPH6)
    gen.set_defaults(handler=cmd_gen)

    history = sub.add_parser("history", help="list recorded runs")
    history.add_argument("--db", default=None)
    history.add_argument("--limit", type=int, default=20)
    history.add_argument("--outcome", default=None)
    history.add_argument("--json", action="store_true")
    history.set_defaults(handler=cmd_history)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
