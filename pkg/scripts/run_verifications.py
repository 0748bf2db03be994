"""Run every theorem verification at its default desk-scale window.

Prints one line per theorem and exits nonzero on the first failure, so the
script doubles as a CI smoke for the whole verification stack. Pass wider
windows per theorem through the cisgraph CLI instead when chasing a specific
order.
"""

import argparse
import sys
import time

from cisgraph import enumeration as enum
from cisgraph.cli import _VERIFY_DEFAULTS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--only", choices=enum.THEOREM_IDS, default=None,
                    help="run a single theorem instead of the full slate")
    args = ap.parse_args()

    ids = (args.only,) if args.only else enum.THEOREM_IDS
    failures = 0
    for theorem_id in ids:
        lo, hi = _VERIFY_DEFAULTS[theorem_id]
        t0 = time.perf_counter()
        report = enum.verify_theorem(theorem_id, lo, hi, workers=args.workers)
        dt = time.perf_counter() - t0
        status = "pass" if report.passed else "FAIL"
        print(f"{status}  {theorem_id:24s} n={lo}..{hi}  "
              f"{len(report.entries)} checks  {dt:6.1f}s")
        if not report.passed:
            failures += 1
            for entry in report.entries:
                if not entry["ok"]:
                    print(f"      {entry}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
