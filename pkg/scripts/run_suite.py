#!/usr/bin/env python3
"""Run the full proposition sweep and print the row table.

Equivalent to `fuzznorm suite --all`; kept as a script so the sweep can
be launched straight from a checkout.
"""

import argparse
import sys

from fuzznorm.reports import dumps
from fuzznorm.suite import SuiteConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--only", default=None,
                        help="comma-separated row ids")
    parser.add_argument("--json", action="store_true",
                        help="emit the byte-stable JSON form")
    args = parser.parse_args()
    only = [r.strip() for r in args.only.split(",")] if args.only else None
    result = run_suite(SuiteConfig(grid=args.grid), only=only, jobs=args.jobs)
    if args.json:
        sys.stdout.write(dumps(result.to_json()))
    else:
        print(result.render_text())
    return 1 if result.total_counterexamples else (2 if result.any_skipped else 0)


if __name__ == "__main__":
    sys.exit(main())
