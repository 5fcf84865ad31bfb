"""Command-line surface: analyze, census, verify, export.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage/parse error, 3 scale/resource error.  JSON payloads are key-sorted
and carry no timestamps, so identical invocations are byte-identical;
--stable additionally drops the timing field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import GroupSpecError, ResourceLimitError, ScaleError
from .groups import max_materialize
from .groupspec import parse_group_spec
from .power_graph import PowerGraph, export_dot, export_json_graph
from .report import (
    ANALYSIS_REPORT_SCHEMA,
    CENSUS_LINE_SCHEMA,
    ELEMENT_REPORT_SCHEMA,
    GRAPH_EXPORT_SCHEMA,
    analyze_group,
    census_json_line,
    element_report,
    validate_document,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_SCALE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powercrit",
        description="Power graphs of finite groups: twin classes, criticality, "
        "cyclic partitions and the metacyclic Frobenius census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one group (or one element of it)")
    p.add_argument("spec", help="group spec, e.g. 'D:15', 'M:5,2,2,2,7', 'C:2 x C:3'")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering of the power graph")
    p.add_argument("--element", metavar="DESC", help="single-element report (works at lazy scale)")
    p.add_argument("--stable", action="store_true", help="drop timing for golden-file comparison")
    p.add_argument("--workers", type=int, default=0, help="worker processes for lazy scans (0 = all cores)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="enumerate metacyclic parameter tuples")
    p.add_argument("--max-order", type=int, default=100)
    p.add_argument("--verify-up-to", type=int, default=0,
                   help="rebuild groups up to this order and compare graph criticality")
    p.add_argument("--all-r", action="store_true", help="list every well-defined r, not just the least")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=("closure", "criticality", "partitions", "theorems", "all"),
                   default="all")
    p.add_argument("--max-order", type=int, default=120)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export a graph as DOT or JSON")
    p.add_argument("spec")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--graph", choices=("power", "enhanced"), default="power")
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (GroupSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ScaleError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def cmd_analyze(args) -> int:
    group = parse_group_spec(args.spec)
    workers = args.workers if args.workers > 0 else (os.cpu_count() or 1)
    started = time.perf_counter()
    if args.element is not None:
        doc = element_report(group, args.element, workers=workers)
        schema = ELEMENT_REPORT_SCHEMA
    else:
        if group.order > max_materialize():
            raise ScaleError(
                f"full analysis needs materialized mode: order {group.order} exceeds "
                f"threshold {max_materialize()}; use --element for per-element queries"
            )
        graph = PowerGraph(group)
        doc = analyze_group(group, graph)
        schema = ANALYSIS_REPORT_SCHEMA
        if args.dot:
            _write_text(args.dot, export_dot(graph, "power"))
    if not args.stable:
        doc["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    validate_document(doc, schema)
    if args.json:
        sys.stdout.write(_dump(doc))
    else:
        _print_human(doc)
    return EXIT_OK


def _print_human(doc: dict) -> None:
    out = sys.stdout
    out.write(f"group {doc['group']}  order {doc['order']}\n")
    if "element" in doc:
        out.write(
            f"element {doc['element']}  order {doc['element_order']}\n"
            f"  twin class size {doc['n_class_size']}  kind {doc['kind']}  "
            f"critical {doc['is_critical']}  closure size {doc['closure_size']}\n"
            f"  maximal {doc['is_maximal']}  "
            f"generator class size {doc['diamond_class_size']}\n"
        )
        return
    out.write(f"primes {doc['pi']}  eppo {doc['is_eppo']}\n")
    out.write(f"star vertices: {doc['star']['size']} ({', '.join(doc['star']['members'])})\n")
    gk = doc["group_kind"]
    out.write(
        f"group flags: critical={gk['is_critical_group']} "
        f"plain={gk['is_plain_group']} compound={gk['is_compound_group']}\n"
    )
    part = doc["partition"]
    if part["exists"]:
        orders = part["component_orders"]
        out.write(f"cyclic partition: {len(orders)} components, orders {orders}\n")
    elif part["obstruction"] is not None:
        ob = part["obstruction"]
        out.write(
            f"no cyclic partition: <{ob['first']}> and <{ob['second']}> share {ob['shared']}\n"
        )
    if doc["frobenius"] is not None:
        f = doc["frobenius"]
        out.write(f"frobenius structure: (p,a,q,b) = ({f['p']},{f['a']},{f['q']},{f['b']})\n")
    out.write("classes (representative / size / kind / params / critical / closure):\n")
    for c in doc["classes"]:
        params = c["params"]
        ptxt = f"(p={params['p']},r={params['r']},s={params['s']})" if params else "-"
        star = " [star]" if c["is_star_class"] else ""
        out.write(
            f"  {c['representative']:>20}  {c['size']:>5}  {c['kind']:>8}  {ptxt:>14}  "
            f"{str(c['is_critical']):>5}  {c['closure_size']:>5}{star}\n"
        )
    if "timing_ms" in doc:
        out.write(f"timing: {doc['timing_ms']} ms\n")


def cmd_census(args) -> int:
    from .frobenius import census

    entries = census(args.max_order, verify_up_to=args.verify_up_to, all_r=args.all_r)
    mismatch = False
    if args.json:
        for e in entries:
            line = census_json_line(e)
            validate_document(line, CENSUS_LINE_SCHEMA)
            sys.stdout.write(json.dumps(line, sort_keys=True) + "\n")
    else:
        header = f"{'p':>5} {'a':>2} {'q':>3} {'b':>2} {'r':>5} {'order':>6}  flags (eppo/frob/crit)  graph"
        sys.stdout.write(header + "\n")
        for e in entries:
            m, f = e.params, e.flags
            flags = f"{_yn(f.eppo)}/{_yn(f.frobenius)}/{_yn(f.critical)}"
            graph = "-" if e.graph_is_critical is None else (
                f"critical={_yn(e.graph_is_critical)} "
                + ("ok" if e.graph_agrees else "MISMATCH")
            )
            sys.stdout.write(
                f"{m.p:>5} {m.a:>2} {m.q:>3} {m.b:>2} {m.r:>5} {m.order:>6}  "
                f"{flags:>21}  {graph}\n"
            )
        criticals = [e for e in entries if e.flags.critical]
        sys.stdout.write(
            f"{len(entries)} tuples, {len(criticals)} critical "
            f"(orders {sorted({e.params.order for e in criticals})})\n"
        )
    mismatch = any(e.graph_agrees is False for e in entries)
    return EXIT_VERIFY_FAIL if mismatch else EXIT_OK


def _yn(b: bool) -> str:
    return "y" if b else "n"


def cmd_verify(args) -> int:
    from .verify import run_suites

    results = run_suites([args.suite], args.max_order)
    failed = False
    for res in results:
        status = "pass" if res.passed else "FAIL"
        sys.stdout.write(f"suite {res.name}: {status} ({res.checks} checks, {len(res.failures)} failures)\n")
        for line in res.failures:
            sys.stdout.write(f"  counterexample: {line}\n")
        failed = failed or not res.passed
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def cmd_export(args) -> int:
    group = parse_group_spec(args.spec)
    if group.order > max_materialize():
        raise ScaleError(
            f"graph export needs materialized mode: order {group.order} exceeds "
            f"threshold {max_materialize()}"
        )
    graph = PowerGraph(group)
    if args.format == "dot":
        payload = export_dot(graph, args.graph)
    else:
        doc = export_json_graph(graph, args.graph)
        validate_document(doc, GRAPH_EXPORT_SCHEMA)
        payload = _dump(doc)
    if args.output:
        _write_text(args.output, payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _write_text(path: str, payload: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(payload)


if __name__ == "__main__":
    sys.exit(main())
