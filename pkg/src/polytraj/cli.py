"""Command-line interface: ``python -m polytraj <command> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from .exactfield import parse_coeffs
from .floattrace import float_trace
from .geometry import Direction2
from .search import DEFAULT_DEPTH, WITNESS_DEPTH, SearchConfig, default_start, run_search
from .serialize import dumps, loads, trajectory_to_dict
from .solid import KINDS, build_solid
from .tracer import DEFAULT_MAX_CROSSINGS, HitVertex, InvalidDirection, Trajectory, trace
from .witness import NoTrajectoryFound, terminal_point, verify_witness

ORACLE_TOL = 1e-9
EVIDENCE_NOTE = "bounded search: evidence only, not a proof of nonexistence"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _describe(t: Trajectory) -> str:
    end = t.developed_end
    status = f"hit vertex {t.status.vertex}" if isinstance(t.status, HitVertex) else "budget exhausted"
    return (
        f"{t.solid}: start vertex {t.start_vertex} in face {t.start_face}, "
        f"{t.crossings} crossings, faces {list(t.face_sequence)}, {status}; "
        f"end ~ ({float(end.x):.12f}, {float(end.y):.12f}), |end|^2 ~ {float(t.total_length_sq):.12f}"
    )


def _parse_direction(solid, text: str) -> Direction2:
    try:
        xs, ys = text.split(";")
        return Direction2(parse_coeffs(solid.descriptor, xs.split(",")), parse_coeffs(solid.descriptor, ys.split(",")))
    except ValueError as exc:
        raise SystemExit(f"bad --direction {text!r}: {exc}") from None


def _witness_trajectory() -> Trajectory:
    report = verify_witness(target="corrected")
    return report.trajectory


def _load_one(args) -> Trajectory:
    if args.witness:
        return _witness_trajectory()
    if not args.input:
        raise SystemExit("need --input or --witness")
    data = loads(Path(args.input).read_text())
    if isinstance(data, list):
        if not data:
            raise SystemExit(f"{args.input} holds no trajectories")
        data = data[args.index]
    return data


def cmd_verify(args) -> int:
    try:
        report = verify_witness(depth=args.depth, target=args.target)
    except NoTrajectoryFound as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    diff = report.coefficient_diff()
    if args.format == "json":
        payload = {
            "target": report.target_name,
            "ok": report.ok,
            "checks": report.checks,
            "expected_end": [report.target.x.to_strings(), report.target.y.to_strings()],
            "diff": [{"coord": c, "expected": e, "computed": g} for c, e, g in diff],
            "elapsed_s": round(report.elapsed, 3),
            "trajectory": trajectory_to_dict(report.trajectory),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"target: {report.target_name} terminal point, search depth {report.depth}")
        print(_describe(report.trajectory))
        for name, ok in report.checks.items():
            print(f"  [{'PASS' if ok else 'FAIL'}] {name}")
        for coord, want, got in diff:
            print(f"  {coord}: expected {want}  computed {got}   (basis 1, sqrt5, r, r*sqrt5)")
        print(f"elapsed {report.elapsed:.2f}s -> {'OK' if report.ok else 'FAILED'}")
    return 0 if report.ok else 1


def cmd_trace(args) -> int:
    s = build_solid(args.solid)
    v, f = default_start(s)
    v = v if args.start_vertex is None else args.start_vertex
    f = f if args.start_face is None else args.start_face
    if args.witness_direction:
        if s.kind != "dodecahedron":
            raise SystemExit("--witness-direction applies to the dodecahedron")
        end = terminal_point(s.descriptor)
        d = Direction2(end.x, end.y)
    elif args.direction:
        d = _parse_direction(s, args.direction)
    else:
        raise SystemExit("need --direction or --witness-direction")
    try:
        t = trace(s, v, f, d, max_crossings=args.max_crossings)
    except (InvalidDirection, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json" or args.out:
        _emit(dumps(t), args.out)
    if args.format == "text":
        print(_describe(t))
    return 0


def cmd_search(args) -> int:
    s = build_solid(args.solid)
    depth = args.depth if args.depth is not None else DEFAULT_DEPTH
    cfg = SearchConfig(depth=depth, prune=not args.no_prune, workers=args.workers, all_classes=args.all_classes)
    found = run_search(s, cfg)
    if args.out:
        Path(args.out).write_text(dumps(found))
    if args.format == "json" and not args.out:
        sys.stdout.write(dumps(found))
        return 0
    if not found:
        print(f"{s.kind}: no vertex-to-self trajectory found up to depth {depth} ({EVIDENCE_NOTE})")
    else:
        label = "trajectories" if args.all_classes else "classes"
        print(f"{s.kind}: {len(found)} vertex-to-self {label} up to depth {depth}")
        for t in found:
            print("  " + _describe(t))
    return 0


def cmd_render_net(args) -> int:
    from .export import render_net_svg

    t = _load_one(args)
    _emit(render_net_svg(t, precision=args.precision), args.out)
    return 0


def cmd_render_obj(args) -> int:
    from .export import render_obj

    t = _load_one(args)
    _emit(render_obj(t), args.out)
    return 0


def cmd_oracle(args) -> int:
    rng = random.Random(args.seed)
    kinds = KINDS if args.solid == "all" else (args.solid,)
    worst_all = 0.0
    for kind in kinds:
        s = build_solid(kind)
        worst = 0.0
        for _ in range(args.samples):
            f = rng.randrange(s.n_faces)
            c = rng.randrange(s.n_face_sides)
            p = s.corner(c)
            a, b = s.corner(c + 1) - p, s.corner(c - 1) - p
            i, j = rng.randint(1, 1000), rng.randint(1, 1000)
            d = Direction2(a.x * i + b.x * j, a.y * i + b.y * j)
            t = trace(s, s.vertex_class[(f, c)], f, d, max_crossings=args.max_crossings)
            ft = float_trace(s, f, c, complex(float(d.dx), float(d.dy)), args.max_crossings)
            worst = max(worst, abs(complex(*t.developed_end.to_floats()) - ft.developed_end))
        worst_all = max(worst_all, worst)
        print(f"{kind}: {args.samples} samples, max endpoint deviation {worst:.3e}")
    ok = worst_all <= ORACLE_TOL
    print(f"tolerance {ORACLE_TOL:g}: {'OK' if ok else 'FAILED'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")

    p = argparse.ArgumentParser(prog="polytraj", description="Exact geodesics on Platonic solids.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="reproduce the dodecahedron trajectory")
    v.add_argument("--target", choices=("displayed", "corrected"), default="displayed")
    v.add_argument("--depth", type=int, default=WITNESS_DEPTH)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", parents=[common], help="trace one trajectory")
    t.add_argument("--solid", choices=KINDS, default="dodecahedron")
    t.add_argument("--start-vertex", type=int)
    t.add_argument("--start-face", type=int)
    t.add_argument("--direction", help="'x0,x1,..;y0,y1,..' rational coefficients over the field basis")
    t.add_argument("--witness-direction", action="store_true", help="aim at the dodecahedron terminal point")
    t.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    t.add_argument("--out")
    t.set_defaults(func=cmd_trace)

    s = sub.add_parser("search", parents=[common], help="search vertex-to-self trajectories")
    s.add_argument("--solid", choices=KINDS, default="dodecahedron")
    s.add_argument("--depth", type=int)
    s.add_argument("--all-classes", action="store_true", help="skip symmetry reduction")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--no-prune", action="store_true", help="disable wedge pruning (same result, slower)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    for name, func, help_ in (
        ("render-net", cmd_render_net, "SVG net with the trajectory"),
        ("render-obj", cmd_render_obj, "OBJ solid with the trajectory polyline"),
    ):
        r = sub.add_parser(name, parents=[common], help=help_)
        r.add_argument("--input", help="trajectory JSON (a record or an array)")
        r.add_argument("--index", type=int, default=0, help="record to use from an array")
        r.add_argument("--witness", action="store_true", help="use the dodecahedron trajectory")
        r.add_argument("--out")
        if name == "render-net":
            r.add_argument("--precision", type=int, default=9)
        r.set_defaults(func=func)

    o = sub.add_parser("oracle", parents=[common], help="exact vs floating-point tracer")
    o.add_argument("--solid", choices=KINDS + ("all",), default="all")
    o.add_argument("--samples", type=int, default=100)
    o.add_argument("--max-crossings", type=int, default=50)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
