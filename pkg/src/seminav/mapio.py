"""Map, grid, scenario, and result file formats.

A map is one JSON document plus a sidecar ASCII PGM occupancy image
(P2; 0 = occupied, maxval = free, anything else = unknown; row 0 is the
top of the image). World frame is meters, x right, y up; the grid origin
in the map file is the world position of the image's top-left corner.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import MapParseError, MapValidationError
from .geometry import Point2, Pose2
from .metrics import MetricsReport
from .planner import Region, SemanticMap
from .potential import CellState, OccupancyGrid, PotentialParams
from .roadnet import Lane, LinkParams, network_from_lanes

SCHEMA_VERSION = 1


def _require(obj: dict, key: str, ctx: str):
    if key not in obj:
        raise MapValidationError(f"{ctx}: missing required field '{key}'")
    return obj[key]


def _as_xy(value, ctx: str) -> Point2:
    if not (isinstance(value, (list, tuple)) and len(value) == 2):
        raise MapValidationError(f"{ctx}: expected [x, y], got {value!r}")
    try:
        return Point2(float(value[0]), float(value[1]))
    except (TypeError, ValueError) as exc:
        raise MapValidationError(f"{ctx}: non-numeric coordinate ({exc})") from exc


def _as_number(value, ctx: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise MapValidationError(f"{ctx}: expected a number, got {value!r}")
    return float(value)


def load_occupancy(path: str | Path, origin: Point2, resolution: float) -> OccupancyGrid:
    """Parse an ASCII PGM into an occupancy grid ('#' comments allowed)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MapParseError(f"cannot read occupancy file {path}: {exc}") from exc
    tokens: list[str] = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0]
        tokens.extend(stripped.split())
    if not tokens or tokens[0] != "P2":
        raise MapParseError(f"{path}: expected ASCII PGM magic 'P2'")
    if len(tokens) < 4:
        raise MapParseError(f"{path}: truncated PGM header")
    try:
        width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    except ValueError as exc:
        raise MapParseError(f"{path}: malformed PGM header ({exc})") from exc
    if width < 1 or height < 1 or maxval < 1:
        raise MapParseError(f"{path}: invalid PGM dimensions {width}x{height} maxval {maxval}")
    data = tokens[4:]
    if len(data) != width * height:
        raise MapParseError(
            f"{path}: expected {width * height} pixel values, found {len(data)}"
        )
    try:
        pixels = np.array(data, dtype=np.int64).reshape(height, width)
    except ValueError as exc:
        raise MapParseError(f"{path}: non-integer pixel data ({exc})") from exc
    if pixels.min() < 0 or pixels.max() > maxval:
        raise MapParseError(f"{path}: pixel value out of range [0, {maxval}]")
    cells = np.full((height, width), CellState.UNKNOWN, dtype=np.uint8)
    cells[pixels == 0] = CellState.OCCUPIED
    cells[pixels == maxval] = CellState.FREE
    return OccupancyGrid(resolution, origin, width, height, cells)


def write_pgm(path: str | Path, cells: np.ndarray, maxval: int = 255):
    """Write occupancy cell states back to ASCII PGM (unknown -> maxval//2)."""
    cells = np.asarray(cells, dtype=np.uint8)
    height, width = cells.shape
    # Index by cell state: FREE=0, OCCUPIED=1, UNKNOWN=2.
    strmap = np.array([str(maxval), "0", str(maxval // 2)])
    rows = ["P2", f"{width} {height}", str(maxval)]
    rows.extend(" ".join(strmap[row]) for row in cells)
    Path(path).write_text("\n".join(rows) + "\n")


def _load_regions(entries, ctx: str) -> list[Region]:
    regions = []
    for i, entry in enumerate(entries):
        ectx = f"{ctx}[{i}]"
        name = _require(entry, "name", ectx)
        raw_poly = _require(entry, "polygon", ectx)
        if not isinstance(raw_poly, list) or len(raw_poly) < 3:
            raise MapValidationError(f"{ectx}.polygon: need at least 3 vertices")
        poly = tuple(_as_xy(v, f"{ectx}.polygon[{j}]") for j, v in enumerate(raw_poly))
        regions.append(Region(str(name), poly))
    return regions


def load_map(path: str | Path) -> SemanticMap:
    """Load and validate a map file into a fully built SemanticMap."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise MapParseError(f"cannot read map file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MapParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise MapParseError(f"{path}: top-level value must be an object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise MapValidationError(f"schema_version: unsupported version {version}")

    robot_radius = _as_number(doc.get("robot_radius", 0.0), "robot_radius")
    try:
        link_params = LinkParams(**doc.get("link_params", {}))
    except TypeError as exc:
        raise MapValidationError(f"link_params: unknown field ({exc})") from exc
    pot_kwargs = dict(doc.get("potential_params", {}))
    pot_kwargs.setdefault("inflation_radius", robot_radius)
    try:
        potential_params = PotentialParams(**pot_kwargs)
    except TypeError as exc:
        raise MapValidationError(f"potential_params: unknown field ({exc})") from exc

    lanes = []
    for i, entry in enumerate(_require(doc, "lanes", "map")):
        ctx = f"lanes[{i}]"
        lanes.append(
            Lane(
                id=int(_as_number(_require(entry, "id", ctx), f"{ctx}.id")),
                start=_as_xy(_require(entry, "start", ctx), f"{ctx}.start"),
                end=_as_xy(_require(entry, "end", ctx), f"{ctx}.end"),
            )
        )
    network = network_from_lanes(lanes, link_params)

    grid_ref = _require(doc, "grid", "map")
    grid_file = Path(_require(grid_ref, "file", "grid"))
    if not grid_file.is_absolute():
        grid_file = path.parent / grid_file
    origin = _as_xy(_require(grid_ref, "origin", "grid"), "grid.origin")
    resolution = _as_number(_require(grid_ref, "resolution", "grid"), "grid.resolution")
    occupancy = load_occupancy(grid_file, origin, resolution)

    return SemanticMap(
        passages=_load_regions(doc.get("passages", []), "passages"),
        intersections=_load_regions(doc.get("intersections", []), "intersections"),
        parking_areas=_load_regions(doc.get("parking", []), "parking"),
        occupancy=occupancy,
        network=network,
        potential_params=potential_params,
        link_params=link_params,
        resample_spacing=_as_number(doc.get("resample_spacing", 0.25), "resample_spacing"),
        robot_radius=robot_radius,
    )


def load_scenarios(path: str | Path) -> list[dict]:
    """Scenario list: [{name, start: [x, y], goal: [x, y], expected_case?}]."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise MapParseError(f"cannot read scenario file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MapParseError(f"{path}: invalid JSON ({exc})") from exc
    entries = doc.get("scenarios") if isinstance(doc, dict) else doc
    if not isinstance(entries, list) or not entries:
        raise MapValidationError(f"{path}: scenario list is empty")
    out = []
    for i, entry in enumerate(entries):
        ctx = f"scenarios[{i}]"
        out.append(
            {
                "name": str(_require(entry, "name", ctx)),
                "start": _as_xy(_require(entry, "start", ctx), f"{ctx}.start"),
                "goal": _as_xy(_require(entry, "goal", ctx), f"{ctx}.goal"),
                "expected_case": entry.get("expected_case"),
            }
        )
    return out


def relation_report(smap: SemanticMap) -> str:
    """Human-readable summary of the inferred lane relations."""
    lines = [
        f"lanes: {len(smap.network.lanes)}, nodes: {smap.network.num_nodes}, "
        f"edges: {smap.network.num_edges}"
    ]
    for lane in smap.network.lanes:
        lines.append(
            f"  lane {lane.id}: from={sorted(lane.from_ids)} to={sorted(lane.to_ids)} "
            f"reverse={sorted(lane.reverse_ids)}"
        )
    lines.append(
        f"regions: {len(smap.passages)} passages, {len(smap.intersections)} intersections, "
        f"{len(smap.parking_areas)} parking areas"
    )
    return "\n".join(lines)


def write_path_csv(path: str | Path, poses: list[Pose2]):
    """CSV columns x,y,theta with 6 decimal places."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "theta"])
        for pose in poses:
            writer.writerow([f"{pose.x:.6f}", f"{pose.y:.6f}", f"{pose.heading:.6f}"])


def read_path_csv(path: str | Path) -> list[Pose2]:
    poses = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["x", "y", "theta"]:
            raise MapParseError(f"{path}: expected header x,y,theta")
        for row in reader:
            if len(row) != 3:
                raise MapParseError(f"{path}: malformed row {row!r}")
            poses.append(Pose2(Point2(float(row[0]), float(row[1])), float(row[2])))
    return poses


def write_metrics_json(path: str | Path, report: MetricsReport):
    Path(path).write_text(json.dumps(metrics_dict(report), indent=2, sort_keys=True) + "\n")


def metrics_dict(report: MetricsReport) -> dict:
    return {
        "t_s": report.t,
        "l_m": report.l,
        "d_e_m": report.d_e,
        "theta_e_rad": report.theta_e,
        "j_cost": report.j_cost,
    }
