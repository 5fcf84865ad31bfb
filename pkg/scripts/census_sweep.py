#!/usr/bin/env python3
"""Sweep the metacyclic census and cross-verify criticality by graph.

Usage:
    python scripts/census_sweep.py [--max-order N] [--verify] [--jsonl PATH]

Prints the census table; with --verify every group is rebuilt and its
graph-computed criticality compared against the arithmetic flag (the
desk-scale Main Theorem check).  Exits 1 on any disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from powercrit import census
from powercrit.report import census_json_line


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=1200)
    ap.add_argument("--verify", action="store_true")
    ap.add_argument("--jsonl", metavar="PATH", help="also dump one JSON object per tuple")
    args = ap.parse_args()

    entries = census(
        args.max_order,
        verify_up_to=args.max_order if args.verify else 0,
        all_r=True,
    )
    criticals = [e for e in entries if e.flags.critical]
    print(f"{len(entries)} well-defined tuples with order <= {args.max_order}")
    print(f"{len(criticals)} critical tuples, orders {sorted({e.params.order for e in criticals})}")
    for e in criticals:
        m = e.params
        verdict = "" if e.graph_is_critical is None else f"  graph-critical={e.graph_is_critical}"
        print(f"  M:{m.p},{m.a},{m.q},{m.b},{m.r}  order {m.order}{verdict}")

    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8", newline="\n") as fh:
            for e in entries:
                fh.write(json.dumps(census_json_line(e), sort_keys=True) + "\n")
        print(f"wrote {len(entries)} lines to {args.jsonl}")

    bad = [e for e in entries if e.graph_agrees is False]
    if bad:
        print(f"DISAGREEMENTS: {len(bad)}", file=sys.stderr)
        for e in bad:
            print(f"  {e}", file=sys.stderr)
        return 1
    if args.verify:
        print("graph classification agrees with the arithmetic flag on every tuple")
    return 0


if __name__ == "__main__":
    sys.exit(main())
