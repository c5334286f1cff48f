"""Command-line front end.

Subcommands: measure, classify, verify, optimize, table1, export.
Machine-readable JSON goes to stdout only; diagnostics go to stderr.
Exit codes: 0 success, 1 usage or schema error, 2 verification failure,
3 numerical failure (degenerate geometry or no feasible start).
Seeded commands produce byte-identical stdout on reruns.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import jsonio
from .errors import DegenerateBodyError, NoFeasibleStartError, SchemaError
from .optimizer import (
    KNOWN_MIN_WIDTH,
    OPTIMUM_KNOWN,
    TYPE4_WIDTH_LOWER_BOUND,
    OptimConfig,
    minimize_mean_width,
    minimize_width_isotropic_fastpath,
    width_table,
)
from .parallelohedron import (
    TYPE_FACE_COUNTS,
    TYPE_NAMES,
    ParallelohedronType,
    belts,
    body_from_json,
    build,
    classify,
    measures_rep,
)
from .verify import SUITES, run_suite
from .volume_form import PAIRS
from .zonotope import measures, mesh_surface_area, mesh_volume, realize_hull, to_off

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_NUMERICAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_json(path: str):
    if path == "-":
        raw = sys.stdin.read()
    else:
        try:
            raw = Path(path).read_text()
        except OSError as exc:
            raise SchemaError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON input: {exc}") from exc


def _emit(doc, indent) -> None:
    sys.stdout.write(jsonio.dumps(doc, indent=indent) + "\n")


def _finite_or_none(x: float):
    return x if math.isfinite(x) else None


def _tetra_rows(t) -> list[list[float]]:
    return [[v.x, v.y, v.z] for v in t.vertices]


def cmd_measure(args) -> int:
    body = body_from_json(_load_json(args.input))
    if isinstance(body, tuple):
        tetra, betas = body
        report = measures_rep(tetra, betas)
        zono = build(tetra, betas)
    else:
        zono = body
        report = measures(zono)
    mesh = realize_hull(zono)
    hull_vol = mesh_volume(mesh)
    hull_surf = mesh_surface_area(mesh)
    doc = {
        "volume": report.volume,
        "surface_area": report.surface_area,
        "mean_width": report.mean_width,
        "second_quermass": report.second_quermass,
        "inradius": report.inradius,
        "hull_check": {
            "volume": hull_vol,
            "surface_area": hull_surf,
            "volume_delta": abs(hull_vol - report.volume),
            "surface_area_delta": abs(hull_surf - report.surface_area),
        },
        "method": dict(report.provenance),
    }
    _emit(doc, args.json_indent)
    return EXIT_OK


def cmd_classify(args) -> int:
    body = body_from_json(_load_json(args.input))
    if not isinstance(body, tuple):
        raise SchemaError("classification needs the tetrahedron+betas input form")
    tetra, betas = body
    ptype = classify(betas, args.eps)
    values = betas.as_tuple()
    scale = max(values) if max(values) > 0.0 else 1.0
    eps = args.eps if args.eps is not None else 1e-9 * scale
    zero_pairs = [list(PAIRS[k]) for k in range(6) if values[k] <= eps]
    doc = {
        "type": int(ptype),
        "type_name": TYPE_NAMES[ptype],
        "zero_pairs": zero_pairs,
        "face_count": TYPE_FACE_COUNTS.get(ptype),
    }
    if args.belts:
        zono = build(tetra, betas)
        four, six = belts(zono)
        doc["belts"] = {"four": four, "six": six}
    _emit(doc, args.json_indent)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, trials=args.trials, seed=args.seed or 0, tol=args.tol) for name in names]
    doc = {"suites": [r.to_dict() for r in reports], "pass": all(r.passed for r in reports)}
    _emit(doc, args.json_indent)
    if doc["pass"]:
        return EXIT_OK
    for report in reports:
        if report.passed:
            continue
        replay = Path(f"replay_{report.suite}.json")
        replay.write_text(
            jsonio.dumps(
                {
                    "suite": report.suite,
                    "seed": report.seed,
                    "trials": report.trials,
                    "counterexamples": report.counterexamples(),
                },
                indent=2,
            )
            + "\n"
        )
        print(f"suite {report.suite} failed; replay sample written to {replay}", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def cmd_optimize(args) -> int:
    type_id = args.type
    if args.fastpath:
        if type_id not in (None, 5):
            raise SchemaError("--fastpath applies to type 5 only")
        type_id = 5
    if type_id is None:
        raise SchemaError("--type is required (or pass --fastpath)")
    cfg = OptimConfig(
        starts=args.starts,
        seed=args.seed or 0,
        type_pattern=ParallelohedronType(type_id),
    )
    if args.fastpath:
        result = minimize_width_isotropic_fastpath(cfg, workers=args.workers)
    else:
        result = minimize_mean_width(cfg, workers=args.workers)
    known = OPTIMUM_KNOWN[type_id]
    target = KNOWN_MIN_WIDTH.get(type_id)
    doc = {
        "type": type_id,
        "type_name": TYPE_NAMES[ParallelohedronType(type_id)],
        "best_width": result.best_width,
        "analytic_value": target if known else TYPE4_WIDTH_LOWER_BOUND,
        "abs_error": abs(result.best_width - target) if known else None,
        "bound_gap": None if known else result.best_width - TYPE4_WIDTH_LOWER_BOUND,
        "optimum_known": known,
        "tetrahedron": _tetra_rows(result.tetrahedron),
        "betas": list(result.betas.as_tuple()),
        "converged": result.converged,
        "starts_agreeing": result.starts_agreeing,
        "starts": cfg.starts,
        "seed": cfg.seed,
        "fastpath": bool(args.fastpath),
        "history": [_finite_or_none(h) for h in result.history],
    }
    _emit(doc, args.json_indent)
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = width_table(starts=args.starts, seed=args.seed or 0, workers=args.workers)
    doc = {
        "starts": args.starts,
        "seed": args.seed or 0,
        "rows": [
            {
                "type": row.type_id,
                "type_name": row.type_name,
                "analytic_value": row.analytic_value,
                "computed_value": row.computed_value,
                "abs_error": row.abs_error,
                "optimum_known": row.optimum_known,
                "bound_gap": row.bound_gap,
            }
            for row in rows
        ],
    }
    _emit(doc, args.json_indent)
    return EXIT_OK


def cmd_export(args) -> int:
    data = _load_json(args.input)
    body = body_from_json(data)
    if isinstance(body, tuple):
        tetra, betas = body
        zono = build(tetra, betas)
        report = measures_rep(tetra, betas)
        echo = {"tetrahedron": _tetra_rows(tetra), "betas": list(betas.as_tuple())}
    else:
        zono = body
        report = measures(zono)
        echo = {"generators": [[g.x, g.y, g.z] for g in zono.generators]}
    out = Path(args.out)
    if args.format == "off":
        mesh = realize_hull(zono)
        out.write_text(to_off(mesh))
        receipt = {
            "written": str(out),
            "format": "off",
            "vertices": len(mesh.vertices),
            "faces": len(mesh.faces),
            "edges": mesh.edge_count(),
        }
    else:
        echo["measures"] = {
            "volume": report.volume,
            "surface_area": report.surface_area,
            "mean_width": report.mean_width,
            "second_quermass": report.second_quermass,
            "inradius": report.inradius,
        }
        out.write_text(jsonio.dumps(echo, indent=2) + "\n")
        receipt = {"written": str(out), "format": "json"}
    _emit(receipt, args.json_indent)
    return EXIT_OK


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed for seeded commands (default 0)")
    common.add_argument("--tol", type=float, default=None, help="override the tolerance of verification sweeps")
    common.add_argument(
        "--json-indent",
        type=int,
        default=None,
        metavar="N",
        help="pretty-print JSON output with N spaces (default: compact)",
    )

    parser = _Parser(
        prog="parzon",
        description="Measure, classify, verify, and optimize zonotopal parallelohedra.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser(
        "measure",
        parents=[common],
        help="quermassintegrals of a body, with a convex-hull cross-check",
    )
    p.add_argument("input", help="body JSON file, or - for stdin")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("classify", parents=[common], help="five-type classification of a weighted body")
    p.add_argument("input", help="tetrahedron+betas JSON file, or - for stdin")
    p.add_argument("--eps", type=float, default=None, help="zero threshold for weights (default 1e-9 relative)")
    p.add_argument("--belts", action="store_true", help="also count 4-belts and 6-belts from the hull")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="randomized identity and bound sweeps")
    p.add_argument(
        "--suite",
        choices=sorted(SUITES) + ["all"],
        default="all",
        help="which sweep to run (default: all)",
    )
    p.add_argument("--trials", type=int, default=None, help="sample count (default: per-suite)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("optimize", parents=[common], help="minimize mean width at unit volume for one type")
    p.add_argument("--type", type=int, choices=[1, 2, 3, 4, 5], default=None, help="parallelohedron type")
    p.add_argument("--starts", type=int, default=64, help="multi-start count (default 64)")
    p.add_argument("--workers", type=int, default=1, help="thread count for starts (default 1)")
    p.add_argument(
        "--fastpath",
        action="store_true",
        help="isotropic-position fast path (type 5 only)",
    )
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("table1", parents=[common], help="minimal mean widths at unit volume for all five types")
    p.add_argument("--starts", type=int, default=64, help="multi-start count per type (default 64)")
    p.add_argument("--workers", type=int, default=1, help="thread count for starts (default 1)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("export", parents=[common], help="write an OFF mesh or an annotated JSON body")
    p.add_argument("input", help="body JSON file, or - for stdin")
    p.add_argument("--format", choices=["off", "json"], default="off", help="output format (default off)")
    p.add_argument("--out", required=True, help="output file path")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateBodyError, NoFeasibleStartError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
