"""Command-line interface: invariants, witness, trim, gen, scan, ratio.

Exit codes: 0 on success, 1 when a scan finds a counterexample, 2 on usage
errors. Scans double as regression guards for the solver stack, since every
registered claim is a proven statement.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .claims import REGISTRY
from .families import generate, parse_family_spec
from .graph_core import GraphError, encode_graph6, parse_graph6
from .scan import CSV_COLUMNS, emit_report, invariant_row, ratio_explore, run_claim
from .strong_resolving import metric_dimension, strong_metric_dimension
from .unicyclic import next_trim_step, trim_invariant_check
from .zero_forcing import zero_forcing_number


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsdl",
        description="Exact zero forcing / (strong) metric dimension toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant table for graph6 input")
    src = p_inv.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="one graph6 string")
    src.add_argument("--in", dest="infile", help="file with one graph6 line per graph")
    p_inv.add_argument("--out", choices=["csv", "json"], help="machine format on stdout")

    p_wit = sub.add_parser("witness", help="minimum witness set for one invariant")
    p_wit.add_argument("--graph", required=True)
    p_wit.add_argument("--invariant", required=True, choices=["z", "sdim", "dim"])

    p_trim = sub.add_parser("trim", help="trim a unicyclic graph, logging each step")
    p_trim.add_argument("--graph", required=True)
    p_trim.add_argument("--protect-cycle", action="store_true")

    p_gen = sub.add_parser("gen", help="emit graph6 for a family spec")
    p_gen.add_argument("--family", required=True)
    p_gen.add_argument(
        "--plus-e",
        action="store_true",
        help="for comb: add the spine-end edge (comb-plus-e)",
    )

    p_scan = sub.add_parser("scan", help="check a registered claim over a family")
    p_scan.add_argument("--claim", required=True)
    p_scan.add_argument("--family", required=True)
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument("--out", help="write <out>.json and <out>.csv reports")

    p_ratio = sub.add_parser("ratio", help="largest (Z - sdim)/r ratios over a family")
    p_ratio.add_argument("--family", required=True)
    p_ratio.add_argument("--top", type=int, default=10)
    return parser


def _cmd_invariants(args: argparse.Namespace) -> int:
    if args.graph:
        lines = [args.graph]
    else:
        with open(args.infile) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    if lines and lines[0] == ">>graph6<<":
        lines = lines[1:]  # bare header line; inline headers are handled by the parser
    rows = [invariant_row(ln) for ln in lines]
    if args.out == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
    elif args.out == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    else:
        for row in rows:
            print(" ".join(f"{k}={row[k]}" for k in CSV_COLUMNS))
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    g = parse_graph6(args.graph)
    if args.invariant == "z":
        res = zero_forcing_number(g)
    elif args.invariant == "sdim":
        res = strong_metric_dimension(g)
    else:
        res = metric_dimension(g)
    print(f"{args.invariant}={res.value} witness={','.join(map(str, res.witness))}")
    return 0


def _cmd_trim(args: argparse.Namespace) -> int:
    g = parse_graph6(args.graph)
    cur = g
    while True:
        step = next_trim_step(cur, protect_cycle=args.protect_cycle)
        if step is None:
            break
        deltas = trim_invariant_check(cur, step)
        target = ",".join(map(str, step.removed_vertices()))
        print(
            f"{step.kind.value} target={target} "
            f"dZ={deltas.delta_z:+d} dsdim={deltas.delta_sdim:+d}"
        )
        removed = set(step.removed_vertices())
        cur, _ = cur.induced([v for v in range(cur.n) if v not in removed])
    print(f"result {encode_graph6(cur)}" if cur.n else "result (empty)")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = parse_family_spec(args.family)
    if args.plus_e:
        if spec.family != "comb":
            raise GraphError("--plus-e applies to the comb family only")
        spec = parse_family_spec(str(spec).replace("comb:", "comb-plus-e:", 1))
    g = generate(spec)
    print(encode_graph6(g))
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    report = run_claim(args.claim, args.family, jobs=args.jobs)
    claim = REGISTRY[args.claim]
    if args.out:
        for path in emit_report(report, args.out):
            print(f"wrote {path}", file=sys.stderr)
    else:
        print(report.to_json())
    status = "ok" if report.ok else f"{len(report.counterexamples)} counterexamples"
    print(
        f"{report.claim_id} [{claim.statement}] over {report.family}: "
        f"{report.graphs_checked} graphs, {status}",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def _cmd_ratio(args: argparse.Namespace) -> int:
    report = ratio_explore(args.family, top_k=args.top)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 0


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "invariants": _cmd_invariants,
        "witness": _cmd_witness,
        "trim": _cmd_trim,
        "gen": _cmd_gen,
        "scan": _cmd_scan,
        "ratio": _cmd_ratio,
    }
    try:
        return handlers[args.command](args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
