"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 input outside the
supported class (or malformed).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import PolyError
from .classical import Pinwheel, PinwheelError, pinwheel_full_pipeline
from .graph import EdgeLabeledGraph, GraphError
from .mgs_cycle import predicted_degree_sequence
from .mgs_general import UnsupportedGraphError, mgs_dispatch
from .oracle import certify_basis, report_passes
from .spline import GeneratingSet, NonHomogeneousError, SplineError, gkm_violations

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED = 0, 1, 2


def _load_json(path: str):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _fmt_seq(seq) -> str:
    return "(" + ",".join(str(k) for k in seq) + ")"


def cmd_mgs(args, out) -> int:
    G = EdgeLabeledGraph.from_dict(_load_json(args.graph))
    try:
        B = mgs_dispatch(G)
    except UnsupportedGraphError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    payload = B.to_dict()
    if args.out:
        Path(args.out).write_text(_dump(payload) + "\n", encoding="utf-8")
    out.write(f"generators: {len(B)}\n")
    for i, s in enumerate(B):
        row = ", ".join(f"{v}: {s[v]}" for v in G.vertices)
        out.write(f"  b{i + 1} = ({row})\n")
    seq = payload["degree_sequence"]
    out.write(f"degree sequence: {_fmt_seq(seq) if seq is not None else 'n/a'}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    G = EdgeLabeledGraph.from_dict(_load_json(args.graph))
    data = _load_json(args.spline)
    entries = data["entries"] if "entries" in data else data
    try:
        bad = gkm_violations(G, entries)
    except SplineError as exc:
        print(f"invalid spline data: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if bad:
        out.write("FAIL\n")
        for v in bad:
            out.write(f"  edge {v.u}-{v.v}: {v.difference} is not divisible by {v.label}\n")
        return EXIT_FAIL
    out.write("PASS\n")
    return EXIT_OK


def cmd_certify(args, out) -> int:
    G = EdgeLabeledGraph.from_dict(_load_json(args.graph))
    try:
        B = GeneratingSet.from_dict(_load_json(args.set), graph=G)
    except SplineError as exc:
        out.write(f"FAIL: generator is not a spline: {exc}\n")
        return EXIT_FAIL
    report = certify_basis(B, G, args.dmax)
    out.write(_dump(report) + "\n")
    ok = report_passes(report)
    out.write(("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_pinwheel(args, out) -> int:
    try:
        P = Pinwheel.from_dict(_load_json(args.pinwheel))
    except PinwheelError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    rep = pinwheel_full_pipeline(P, args.dmax)
    out.write(f"triangles: {rep.n}  singular: {'yes' if rep.singular else 'no'}  "
              f"formula: {rep.branch}\n")
    out.write(f"degree sequence: {_fmt_seq(rep.degree_sequence)}\n")
    out.write(f"{'d':>3} {'predicted':>10} {'formula':>8} {'oracle':>7}  result\n")
    for row in rep.rows:
        out.write(f"{row['degree']:>3} {row['predicted']:>10} {row['formula']:>8} "
                  f"{row['oracle']:>7}  {'PASS' if row['pass'] else 'FAIL'}\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_degseq(args, out) -> int:
    try:
        seq = predicted_degree_sequence(args.n, args.label_count)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    out.write(_fmt_seq(seq) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gspline", description="Generating sets for generalized splines on edge-labeled graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mgs", help="build a minimum generating set")
    p.add_argument("graph")
    p.add_argument("--out", help="write the generating set JSON here")
    p.set_defaults(func=cmd_mgs)

    p = sub.add_parser("verify", help="check the edge conditions of a spline")
    p.add_argument("graph")
    p.add_argument("spline")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="compare a generating set against the oracle")
    p.add_argument("graph")
    p.add_argument("set")
    p.add_argument("--dmax", type=int, default=6)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("pinwheel", help="dimension table for a pinwheel triangulation")
    p.add_argument("pinwheel")
    p.add_argument("--dmax", type=int, default=6)
    p.set_defaults(func=cmd_pinwheel)

    p = sub.add_parser("degseq", help="degree sequence of a quadratic-label cycle")
    p.add_argument("n", type=int)
    p.add_argument("label_count", type=int)
    p.set_defaults(func=cmd_degseq)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, PolyError, NonHomogeneousError, KeyError,
            json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
