"""SVG rendering of maps and paths (1 px = 1 grid cell)."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .geometry import Point2, Pose2
from .planner import SemanticMap
from .potential import CellState

REGION_COLORS = {
    "passage": "#d2691e",       # chocolate
    "intersection": "#9400d3",  # dark violet
    "parking": "#90ee90",       # light green
}


def _px(smap: SemanticMap, p: Point2) -> tuple[float, float]:
    grid = smap.occupancy
    return (
        (p.x - grid.origin.x) / grid.resolution,
        (grid.origin.y - p.y) / grid.resolution,
    )


def _poly_points(smap: SemanticMap, polygon) -> str:
    return " ".join(f"{u:.2f},{v:.2f}" for u, v in (_px(smap, p) for p in polygon))


def _obstacle_rects(smap: SemanticMap) -> list[str]:
    """Row-run-length encode occupied/unknown cells into SVG rects."""
    rects = []
    blocked = smap.occupancy.cells != CellState.FREE
    for r in np.nonzero(blocked.any(axis=1))[0]:
        row = blocked[r]
        edges = np.flatnonzero(np.diff(np.concatenate(([0], row.view(np.int8), [0]))))
        for c0, c1 in zip(edges[::2], edges[1::2]):
            rects.append(
                f'<rect x="{c0}" y="{r}" width="{c1 - c0}" height="1" fill="#333333"/>'
            )
    return rects


def render_svg(smap: SemanticMap, path: list[Pose2] | None = None) -> str:
    """Regions, lane arrows, obstacles, and an optional path overlay."""
    grid = smap.occupancy
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{grid.width}" height="{grid.height}" '
        f'viewBox="0 0 {grid.width} {grid.height}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" '
        'markerHeight="7" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#1f3d7a"/></marker></defs>',
        f'<rect x="0" y="0" width="{grid.width}" height="{grid.height}" fill="#f5f5f5"/>',
    ]
    for kind, regions in (
        ("passage", smap.passages),
        ("parking", smap.parking_areas),
        ("intersection", smap.intersections),
    ):
        color = REGION_COLORS[kind]
        for region in regions:
            parts.append(
                f'<polygon points="{_poly_points(smap, region.polygon)}" fill="{color}" '
                f'fill-opacity="0.55" stroke="{color}"><title>{kind}: {region.name}</title></polygon>'
            )
    parts.extend(_obstacle_rects(smap))
    for lane in smap.network.lanes:
        (x1, y1), (x2, y2) = _px(smap, lane.start), _px(smap, lane.end)
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="#1f3d7a" stroke-width="1.5" marker-end="url(#arrow)">'
            f"<title>lane {lane.id}</title></line>"
        )
    if path:
        pts = " ".join(
            f"{u:.2f},{v:.2f}" for u, v in (_px(smap, pose.position) for pose in path)
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#d40000" stroke-width="2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def write_svg(path: str | Path, smap: SemanticMap, plan_path: list[Pose2] | None = None):
    Path(path).write_text(render_svg(smap, plan_path))
