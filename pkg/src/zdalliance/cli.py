"""Command line front end.

Exit codes: 0 success, 1 usage or expression errors, 2 a cross-check
disagreed (oracle vs solver, or a verification MISMATCH), 3 a search budget
ran out before the answer was certain.  The ZDK_ORDER_CAP environment
variable overrides the default ring order cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .expressions import ExprError, build_ring
from .graphs import NoGraphError, build_graph
from .rings import (CapacityError, FiniteRing, local_structure, nilradical,
                    units, zero_divisors)
from .solver import (AllianceProblem, BudgetExceeded, oracle_solve, solve,
                     spectrum)
from .verify import (MISMATCH, SuiteConfig, SUITES, apply_config, emit_report,
                     parse_config_file, records_from_dicts, run_suite,
                     summarize, _records_to_dicts)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_UNKNOWN = 3


def _order_cap() -> Optional[int]:
    raw = os.environ.get("ZDK_ORDER_CAP")
    return int(raw) if raw else None


def _ring(expr: str) -> FiniteRing:
    return build_ring(expr, _order_cap())


def _print_expr_error(expr: str, err: ExprError) -> None:
    print(f"error: {err}", file=sys.stderr)
    if 0 <= err.offset <= len(expr):
        print(f"  {expr}", file=sys.stderr)
        print(f"  {' ' * err.offset}^", file=sys.stderr)


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_ring_info(args) -> int:
    ring = _ring(args.expr)
    zds = zero_divisors(ring)
    us = units(ring)
    nil = nilradical(ring)
    struct = local_structure(ring)
    payload = {
        "expr": args.expr,
        "ring": ring.label,
        "order": ring.order,
        "units": len(us),
        "zero_divisors": len(zds),
        "nilradical": len(nil),
        "is_reduced": len(nil) == 1,
        "is_field": len(zds) == 1,
        "is_local": struct is not None,
    }
    lines = [f"ring: {ring.label}",
             f"order: {ring.order}",
             f"units: {len(us)}",
             f"zero divisors (with 0): {len(zds)}",
             f"nilradical size: {len(nil)}",
             f"reduced: {'yes' if payload['is_reduced'] else 'no'}",
             f"field: {'yes' if payload['is_field'] else 'no'}",
             f"local: {'yes' if payload['is_local'] else 'no'}"]
    if struct is not None:
        payload["maximal_ideal"] = len(struct.maximal_ideal)
        payload["nilpotency_index"] = struct.nilpotency_index
        lines.append(f"maximal ideal size: {len(struct.maximal_ideal)}")
        lines.append(f"nilpotency index: {struct.nilpotency_index}")
    try:
        graph = build_graph(ring)
        edges = sum(graph.adj[v].bit_count() for v in range(graph.vertex_count)) // 2
        payload["graph"] = {"vertices": graph.vertex_count, "edges": edges,
                            "min_degree": graph.min_degree,
                            "max_degree": graph.max_degree}
        lines.append(f"graph: {graph.vertex_count} vertices, {edges} edges, "
                     f"degrees {graph.min_degree}..{graph.max_degree}")
    except NoGraphError:
        payload["graph"] = None
        lines.append("graph: empty (no nonzero zero divisors)")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_graph_export(args) -> int:
    graph = build_graph(_ring(args.expr))
    text = graph.to_dot() if args.format == "dot" else graph.to_dimacs()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    graph = build_graph(_ring(args.expr))
    problem = AllianceProblem(graph, args.k)
    try:
        sol = solve(problem, node_budget=args.budget)
    except BudgetExceeded as exc:
        if args.json:
            print(json.dumps({"ring": graph.ring_label, "k": args.k,
                              "status": "UNKNOWN", "reason": str(exc)}))
        else:
            print("UNKNOWN")
            print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    payload = {"ring": graph.ring_label, "k": args.k, "feasible": sol.feasible,
               "size": sol.size, "nodes": sol.nodes,
               "millis": round(sol.elapsed * 1000.0, 3)}
    lines = []
    if sol.feasible:
        lines.append(f"{graph.ring_label}  k={args.k}  gamma={sol.size}")
    else:
        lines.append(f"{graph.ring_label}  k={args.k}  INFEASIBLE")
    if args.witness and sol.feasible:
        labels = graph.labels_of(sol.witness)
        payload["witness"] = labels
        payload["witness_elements"] = graph.elements_of(sol.witness)
        lines.append("witness: " + ", ".join(labels))
    rc = EXIT_OK
    if args.oracle:
        try:
            ref = oracle_solve(problem)
        except CapacityError as exc:
            # the solve result stands; say plainly that nothing checked it
            payload["oracle"] = {"skipped": str(exc)}
            lines.append(f"oracle: skipped ({exc})")
        else:
            agree = (ref.feasible == sol.feasible and ref.size == sol.size)
            payload["oracle"] = {"feasible": ref.feasible, "size": ref.size,
                                 "agrees": agree}
            lines.append("oracle: agrees" if agree else
                         f"oracle: DISAGREES (oracle={ref}, solver={sol})")
            if not agree:
                rc = EXIT_MISMATCH
    _emit(payload, args.json, lines)
    return rc


def cmd_spectrum(args) -> int:
    graph = build_graph(_ring(args.expr))
    try:
        spect = spectrum(graph, node_budget=args.budget)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    rows = [{"k": k, "feasible": sol.feasible, "size": sol.size}
            for k, sol in sorted(spect.items())]
    payload = {"ring": graph.ring_label, "vertices": graph.vertex_count,
               "max_degree": graph.max_degree, "spectrum": rows}
    lines = [f"{graph.ring_label}: {graph.vertex_count} vertices, "
             f"k from {-graph.max_degree} to {graph.max_degree}"]
    for row in rows:
        size = row["size"] if row["feasible"] else "INFEASIBLE"
        lines.append(f"  k={row['k']:>4}  gamma={size}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _suite_config_from_args(args) -> SuiteConfig:
    cfg = SuiteConfig(suite=args.suite)
    if args.config:
        cfg = apply_config(cfg, parse_config_file(args.config))
        cfg.suite = args.suite
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.out is not None:
        cfg.out = args.out
    if args.format is not None:
        cfg.fmt = args.format
    if args.max_vertices is not None:
        cfg.max_vertices = args.max_vertices
    if args.node_budget is not None:
        cfg.node_budget = args.node_budget
    if args.time_budget is not None:
        cfg.time_budget = args.time_budget
    return cfg


def cmd_verify(args) -> int:
    cfg = _suite_config_from_args(args)
    records = run_suite(cfg)
    if cfg.out:
        emit_report(records, cfg.fmt, cfg.out)
    summary = summarize(records)
    if args.json:
        print(json.dumps({"suite": cfg.suite, "summary": summary,
                          "records": _records_to_dicts(records)}, indent=2))
    else:
        print(f"suite {cfg.suite}: {summary['records']} records, "
              f"{summary['MATCH']} MATCH, "
              f"{summary['WITHIN_BOUNDS']} WITHIN_BOUNDS, "
              f"{summary['MISMATCH']} MISMATCH, {summary['SKIPPED']} SKIPPED")
        for rec in records:
            if rec.status == MISMATCH:
                print(f"  MISMATCH {rec.ring} k={rec.k} "
                      f"predicted {rec.predicted_lo}..{rec.predicted_hi} "
                      f"solved {rec.solved}")
        if cfg.out:
            print(f"report written to {cfg.out} ({cfg.fmt})")
    return EXIT_MISMATCH if summary[MISMATCH] else EXIT_OK


def cmd_report(args) -> int:
    with open(args.infile, encoding="utf-8") as fh:
        rows = json.load(fh)
    if not isinstance(rows, list):
        rows = rows.get("records", [])
    records = records_from_dicts(rows)
    text = emit_report(records, args.format, args.out)
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdalliance",
        description="Zero-divisor graphs of finite commutative rings and "
                    "global defensive k-alliance numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring-info", help="ring structure summary")
    p.add_argument("expr", help="ring expression, e.g. 'Z2 x GF(4)'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ring_info)

    p = sub.add_parser("graph-export", help="write the zero-divisor graph")
    p.add_argument("expr")
    p.add_argument("--format", choices=("dot", "dimacs"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph_export)

    p = sub.add_parser("solve", help="exact gamma_k^d of the graph")
    p.add_argument("expr")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--witness", action="store_true",
                   help="print one optimal alliance")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against brute force (small graphs)")
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("spectrum", help="gamma_k^d for every k in [-D, D]")
    p.add_argument("expr")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run a formula-vs-solver suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--config", help="key = value file with run parameters")
    p.add_argument("--out", help="write the report here")
    p.add_argument("--format", choices=("csv", "md", "json"), default=None)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--json", action="store_true",
                   help="print summary and records as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="re-render saved verification records")
    p.add_argument("--in", dest="infile", required=True,
                   help="records JSON produced by 'verify --format json'")
    p.add_argument("--format", choices=("csv", "md", "json"), default="md")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep 2 for mismatches instead
        return EXIT_USAGE if exc.code else EXIT_OK
    expr = getattr(args, "expr", "")
    try:
        return args.func(args)
    except ExprError as err:
        _print_expr_error(expr, err)
        return EXIT_USAGE
    except CapacityError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
