"""Command-line interface.

Subcommands: validate-map, plan, bench, render. Exit codes: 0 ok,
1 planning failure, 2 usage error, 3 I/O or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .baselines import Baseline, BaselineKind, plan_baseline
from .errors import MapParseError, MapValidationError, PlanningError
from .geometry import Point2
from .mapio import (
    load_map,
    load_scenarios,
    metrics_dict,
    read_path_csv,
    relation_report,
    write_metrics_json,
    write_path_csv,
)
from .metrics import timed_plan
from .planner import plan
from .render import write_svg

PLANNERS = ("ours", "dijkstra", "dijkstra-ss")
# Reported for shape parity with published comparisons; not implemented here.
PLACEHOLDER_PLANNER = "hybrid_astar_in_ss"


def _parse_xy(text: str) -> Point2:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    try:
        return Point2(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _planner_fn(name: str, shortcuts: bool = True):
    if name == "ours":
        return lambda s, g, m: plan(s, g, m, include_reverse=shortcuts)
    if name == "dijkstra":
        return lambda s, g, m: plan_baseline(BaselineKind(Baseline.FREE_DIJKSTRA), s, g, m)
    if name == "dijkstra-ss":
        return lambda s, g, m: plan_baseline(BaselineKind(Baseline.DIJKSTRA_IN_SS), s, g, m)
    raise ValueError(f"unknown planner {name!r}")


def _cmd_validate(args) -> int:
    smap = load_map(args.map)
    print(f"{args.map}: OK")
    print(relation_report(smap))
    return 0


def _cmd_plan(args) -> int:
    smap = load_map(args.map)
    planner = _planner_fn(args.planner, shortcuts=not args.no_shortcuts)
    result = planner(args.start, args.goal, smap)
    print(
        f"planner={args.planner} case={result.case.value} length={result.length:.3f} m "
        f"points={len(result.path)} time={result.planning_time * 1e3:.2f} ms"
    )
    if args.out:
        write_path_csv(args.out, result.path)
        print(f"path written to {args.out}")
    if args.svg:
        write_svg(args.svg, smap, result.path)
        print(f"svg written to {args.svg}")
    if args.metrics:
        report = timed_plan(planner, args.start, args.goal, smap, cycles=args.cycles)
        write_metrics_json(args.metrics, report)
        print(f"metrics written to {args.metrics}")
    return 0


def _cmd_bench(args) -> int:
    smap = load_map(args.map)
    scenarios = load_scenarios(args.scenarios)
    table = {"map": str(args.map), "cycles": args.cycles, "scenarios": []}
    for scenario in scenarios:
        row = {"name": scenario["name"], "planners": {}}
        for name in PLANNERS:
            planner = _planner_fn(name)
            try:
                report = timed_plan(
                    planner, scenario["start"], scenario["goal"], smap, cycles=args.cycles
                )
                row["planners"][name] = metrics_dict(report)
            except PlanningError as exc:
                row["planners"][name] = {"error": str(exc)}
        row["planners"][PLACEHOLDER_PLANNER] = None
        table["scenarios"].append(row)
        _print_bench_row(row)
    Path(args.out).write_text(json.dumps(table, indent=2, sort_keys=True) + "\n")
    print(f"benchmark table written to {args.out}")
    return 0


def _print_bench_row(row: dict):
    print(f"scenario {row['name']}:")
    header = f"  {'metric':<14}" + "".join(f"{name:>16}" for name in PLANNERS)
    print(header)
    for key, label in (("t_s", "t (s)"), ("l_m", "l (m)"), ("d_e_m", "d_e (m)"), ("theta_e_rad", "theta_e (rad)")):
        cells = []
        for name in PLANNERS:
            entry = row["planners"][name]
            cells.append(f"{entry[key]:>16.4f}" if entry and key in entry else f"{'failed':>16}")
        print(f"  {label:<14}" + "".join(cells))


def _cmd_render(args) -> int:
    smap = load_map(args.map)
    path = read_path_csv(args.path) if args.path else None
    write_svg(args.svg, smap, path)
    print(f"svg written to {args.svg}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seminav", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-map", help="load a map and report inferred lane relations")
    p.add_argument("map")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("plan", help="plan between two points")
    p.add_argument("map")
    p.add_argument("--start", type=_parse_xy, required=True, metavar="X,Y")
    p.add_argument("--goal", type=_parse_xy, required=True, metavar="X,Y")
    p.add_argument("--planner", choices=PLANNERS, default="ours")
    p.add_argument("--no-shortcuts", action="store_true", help="disable reverse-lane endpoint mapping")
    p.add_argument("--out", help="write the path as CSV (x,y,theta)")
    p.add_argument("--svg", help="render map + path to SVG")
    p.add_argument("--metrics", help="write a metrics JSON report")
    p.add_argument("--cycles", type=int, default=1, help="timing cycles for --metrics")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("bench", help="run every planner on every scenario")
    p.add_argument("map")
    p.add_argument("scenarios")
    p.add_argument("--cycles", type=int, default=100)
    p.add_argument("--out", required=True, help="output JSON table")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("render", help="render a map (and optional path CSV) to SVG")
    p.add_argument("map")
    p.add_argument("--path", help="path CSV to overlay")
    p.add_argument("--svg", required=True)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PlanningError as exc:
        print(f"planning failed: {exc}", file=sys.stderr)
        return 1
    except (MapParseError, MapValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
