#!/usr/bin/env python3
"""Run every property suite at the acceptance bounds and print a summary.

Usage:
    python scripts/verify_all.py [--max-order N]
"""

from __future__ import annotations

import argparse
import sys
import time

from powercrit.verify import SUITE_NAMES, run_suites


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=600)
    args = ap.parse_args()

    failed = False
    for name in SUITE_NAMES:
        t0 = time.perf_counter()
        (res,) = run_suites([name], args.max_order)
        status = "pass" if res.passed else "FAIL"
        print(f"{res.name:>12}: {status}  {res.checks} checks  ({time.perf_counter() - t0:.1f}s)")
        for line in res.failures[:10]:
            print(f"    {line}")
        failed = failed or not res.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
