"""Command-line runner: execute cases, verify the whole suite, emit reports."""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from gliderlab.cases import CASES, ConfigError, run_case, verify_suite
from gliderlab.report import aggregate_to_json, aggregate_to_text

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gliderlab",
                                description="bounded verification of filtered-chain case studies")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one named case")
    run.add_argument("case")
    run.add_argument("--bound", type=int, default=None, help="ambient degree bound B")
    run.add_argument("--depth", type=int, default=None, help="chain depth")
    run.add_argument("--power", type=int, default=None, help="ideal power bound")
    run.add_argument("--json", dest="json_path", default=None, help="write JSON report here")

    ver = sub.add_parser("verify", help="run the full suite")
    ver.add_argument("--json", dest="json_path", default=None, help="write aggregated JSON here")

    sub.add_parser("list", help="list known cases")
    return p


def _config(args) -> Optional[dict]:
    out = {}
    for key, attr in (("B", "bound"), ("depth", "depth"), ("power", "power")):
        v = getattr(args, attr, None)
        if v is not None:
            out[key] = v
    return out or None


def main(argv: Optional[list] = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "list":
        for name in CASES:
            print(name)
        return EXIT_PASS
    try:
        if args.command == "run":
            reports = [run_case(args.case, _config(args))]
        else:
            reports = verify_suite(None)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    sys.stdout.write(aggregate_to_text(reports))
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(aggregate_to_json(reports))
    if any(r.any_fail() for r in reports):
        return EXIT_FAIL
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
