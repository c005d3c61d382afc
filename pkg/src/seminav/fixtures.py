"""Builders for the bundled demonstration maps.

Three synthetic environments:

* ``loop``      — a small rectangular one-way circuit whose long sides are a
                  reverse-lane pair; the canonical shortcut demo.
* ``twocross``  — two intersections joined by an opposing lane pair plus a
                  dead-end spur; exercises intersection and mixed planning.
* ``garage``    — a 75 m x 128 m two-ring garage loop at 0.05 m resolution
                  for benchmark-scale timing; its PGM is generated on demand
                  (several MB of ASCII), the small maps ship in maps/.

Each builder writes ``<name>.json`` + ``<name>.pgm`` (and a scenario file)
into a directory and returns the map path.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .mapio import write_pgm
from .potential import CellState


def _grid(width_m: float, height_m: float, resolution: float) -> np.ndarray:
    w = round(width_m / resolution)
    h = round(height_m / resolution)
    return np.full((h, w), CellState.FREE, dtype=np.uint8)


def _fill_world_rect(cells, origin, resolution, x0, y0, x1, y1, state):
    """Mark a world-frame axis-aligned rectangle (grid rows count down from
    origin.y)."""
    h, w = cells.shape
    c0 = max(0, int(math.floor((x0 - origin[0]) / resolution)))
    c1 = min(w, int(math.ceil((x1 - origin[0]) / resolution)))
    r0 = max(0, int(math.floor((origin[1] - y1) / resolution)))
    r1 = min(h, int(math.ceil((origin[1] - y0) / resolution)))
    cells[r0:r1, c0:c1] = state


def _write(directory: Path, name: str, doc: dict, cells: np.ndarray, scenarios: list[dict] | None):
    directory.mkdir(parents=True, exist_ok=True)
    pgm = directory / f"{name}.pgm"
    write_pgm(pgm, cells)
    doc["grid"]["file"] = pgm.name
    map_path = directory / f"{name}.json"
    map_path.write_text(json.dumps(doc, indent=2) + "\n")
    if scenarios is not None:
        (directory / f"scenarios_{name}.json").write_text(
            json.dumps({"scenarios": scenarios}, indent=2) + "\n"
        )
    return map_path


def make_loop_map(directory: str | Path) -> Path:
    """One-way rectangular circuit; the long sides are mutual reverse lanes.

    The top lane overhangs the bottom one by 0.02 m on each side so lane
    endpoints project strictly within the opposing segment.
    """
    directory = Path(directory)
    resolution = 0.05
    origin = (-2.0, 5.0)  # top-left world corner of grid
    cells = _grid(14.0, 7.0, resolution)
    doc = {
        "schema_version": 1,
        "robot_radius": 0.15,
        "link_params": {
            # right-angle chaining around the circuit needs alpha_min > pi/2
            "alpha_min": 1.6,
            "d_min": 0.5,
            "theta_threshold": 2.356194490192345,
            "d_threshold": 6.0,
        },
        "potential_params": {"p0": 100.0, "sigma": 0.5, "traversal_weight": 5.0},
        "resample_spacing": 0.25,
        "lanes": [
            {"id": 1, "start": [0.0, 0.0], "end": [10.0, 0.0]},
            {"id": 2, "start": [10.0, 0.0], "end": [10.0, 3.0]},
            {"id": 3, "start": [10.02, 3.0], "end": [-0.02, 3.0]},
            {"id": 4, "start": [0.0, 3.0], "end": [0.0, 0.0]},
        ],
        "passages": [
            {
                "name": "loop_area",
                "polygon": [[-1.5, -1.5], [11.5, -1.5], [11.5, 4.5], [-1.5, 4.5]],
            }
        ],
        "intersections": [],
        "parking": [],
        "grid": {"file": "", "origin": list(origin), "resolution": resolution},
    }
    scenarios = [
        {
            "name": "shortcut_across",
            "start": [2.0, 0.0],
            "goal": [2.0, 3.0],
            "expected_case": "passage2passage",
        },
        {
            "name": "along_lane",
            "start": [1.0, 0.2],
            "goal": [8.0, 0.2],
            "expected_case": "passage2passage",
        },
    ]
    return _write(directory, "loop", doc, cells, scenarios)


def make_twocross_map(directory: str | Path, pillar: bool = True) -> Path:
    """Two intersections joined by an opposing lane pair, plus a northward
    spur out of the first intersection that rejoins the corridor lane."""
    directory = Path(directory)
    resolution = 0.05
    origin = (-3.0, 14.0)
    cells = _grid(26.0, 17.0, resolution)
    if pillar:
        _fill_world_rect(cells, origin, resolution, -0.15, -1.15, 0.15, -0.85, CellState.OCCUPIED)
    doc = {
        "schema_version": 1,
        "robot_radius": 0.2,
        "link_params": {"alpha_min": 1.3},
        "potential_params": {"p0": 100.0, "sigma": 0.5, "traversal_weight": 2.0},
        "resample_spacing": 0.25,
        "lanes": [
            # eastbound / westbound pair joining the intersections
            {"id": 1, "start": [2.0, -1.0], "end": [18.0, -1.0]},
            {"id": 2, "start": [18.3, 1.0], "end": [1.7, 1.0]},
            # north spur out of intersection A and back
            {"id": 3, "start": [-1.0, 2.0], "end": [-1.0, 12.0]},
            {"id": 4, "start": [1.0, 12.3], "end": [1.0, 1.7]},
            # connectors joining the spur to the corridor pair through A
            {"id": 5, "start": [1.0, 1.5], "end": [2.0, -1.0]},
            {"id": 6, "start": [1.6, 1.1], "end": [-1.0, 1.9]},
        ],
        "passages": [
            {"name": "corridor", "polygon": [[2.0, -2.0], [18.0, -2.0], [18.0, 2.0], [2.0, 2.0]]},
            {"name": "north_spur", "polygon": [[-2.0, 2.0], [2.0, 2.0], [2.0, 13.0], [-2.0, 13.0]]},
        ],
        "intersections": [
            {"name": "A", "polygon": [[-2.0, -2.0], [2.0, -2.0], [2.0, 2.0], [-2.0, 2.0]]},
            {"name": "B", "polygon": [[18.0, -2.0], [22.0, -2.0], [22.0, 2.0], [18.0, 2.0]]},
        ],
        "parking": [
            {"name": "spur_lot", "polygon": [[-2.0, 13.0], [2.0, 13.0], [2.0, 14.0], [-2.0, 14.0]]}
        ],
        "grid": {"file": "", "origin": list(origin), "resolution": resolution},
    }
    scenarios = [
        {
            "name": "cross_to_cross",
            "start": [-1.0, 0.5],
            "goal": [21.0, -0.5],
            "expected_case": "intersection2intersection",
        },
        {
            "name": "cross_to_corridor",
            "start": [-1.0, 0.5],
            "goal": [12.0, -0.6],
            "expected_case": "mixed",
        },
    ]
    return _write(directory, "twocross", doc, cells, scenarios)


def make_garage_map(directory: str | Path) -> Path:
    """75 m x 128 m garage: outer counter-clockwise ring and inner clockwise
    ring, 3 m apart, around a non-passable center block; a few pillars in
    the corridors. Benchmark scale: ~3.8M cells at 0.05 m."""
    directory = Path(directory)
    resolution = 0.05
    origin = (0.0, 128.0)
    cells = _grid(75.0, 128.0, resolution)
    # Boundary walls, one cell thick.
    cells[0, :] = CellState.OCCUPIED
    cells[-1, :] = CellState.OCCUPIED
    cells[:, 0] = CellState.OCCUPIED
    cells[:, -1] = CellState.OCCUPIED
    # Corridor pillars.
    for cx, cy in ((30.0, 5.8), (45.0, 122.2), (5.8, 60.0), (69.2, 70.0)):
        _fill_world_rect(
            cells, origin, resolution, cx - 0.2, cy - 0.2, cx + 0.2, cy + 0.2, CellState.OCCUPIED
        )
    doc = {
        "schema_version": 1,
        "robot_radius": 0.2,
        "link_params": {
            "alpha_min": 1.6,
            "d_min": 0.5,
            "theta_threshold": 2.356194490192345,
            "d_threshold": 6.0,
        },
        "potential_params": {"p0": 100.0, "sigma": 0.5, "traversal_weight": 5.0},
        "resample_spacing": 0.25,
        "lanes": [
            # outer ring, clockwise
            {"id": 1, "start": [65.0, 10.0], "end": [10.0, 10.0]},
            {"id": 2, "start": [10.0, 10.0], "end": [10.0, 118.0]},
            {"id": 3, "start": [10.0, 118.0], "end": [65.0, 118.0]},
            {"id": 4, "start": [65.0, 118.0], "end": [65.0, 10.0]},
            # inner ring, counter-clockwise (reverse partner of the outer ring)
            {"id": 5, "start": [13.0, 13.0], "end": [62.0, 13.0]},
            {"id": 6, "start": [62.0, 13.0], "end": [62.0, 115.0]},
            {"id": 7, "start": [62.0, 115.0], "end": [13.0, 115.0]},
            {"id": 8, "start": [13.0, 115.0], "end": [13.0, 13.0]},
        ],
        "passages": [
            {"name": "south", "polygon": [[5.0, 5.0], [70.0, 5.0], [70.0, 16.0], [5.0, 16.0]]},
            {"name": "north", "polygon": [[5.0, 112.0], [70.0, 112.0], [70.0, 123.0], [5.0, 123.0]]},
            {"name": "west", "polygon": [[5.0, 5.0], [16.0, 5.0], [16.0, 123.0], [5.0, 123.0]]},
            {"name": "east", "polygon": [[59.0, 5.0], [70.0, 5.0], [70.0, 123.0], [59.0, 123.0]]},
        ],
        "intersections": [],
        "parking": [
            {"name": "bay_south", "polygon": [[20.0, 16.0], [30.0, 16.0], [30.0, 20.0], [20.0, 20.0]]},
            {"name": "bay_north", "polygon": [[40.0, 108.0], [50.0, 108.0], [50.0, 112.0], [40.0, 112.0]]},
        ],
        "grid": {"file": "", "origin": list(origin), "resolution": resolution},
    }
    scenarios = [
        {
            "name": "south_to_north",
            "start": [20.0, 12.8],
            "goal": [55.0, 114.8],
            "expected_case": "passage2passage",
        },
        {
            "name": "east_to_west",
            "start": [65.3, 40.0],
            "goal": [9.7, 60.0],
            "expected_case": "passage2passage",
        },
        {
            "name": "northeast_to_south",
            "start": [64.7, 100.0],
            "goal": [30.0, 9.7],
            "expected_case": "passage2passage",
        },
    ]
    return _write(directory, "garage75x128", doc, cells, scenarios)
