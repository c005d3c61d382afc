"""Two-layer potential costmap and grid search over it.

The static layer marks inflated obstacles and everything outside the
passable area as lethal. The semantic layer grades passable cells by a
Gaussian of their distance to the road network, saturating at p0 away from
lanes and pinned to p0 on the passable-area boundary. The combined map
takes the per-cell maximum (lethal = +inf, the absorbing element).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

import numpy as np
from scipy import ndimage

from . import kernels
from .errors import GoalBlockedError, MapValidationError, NoRouteError, StartBlockedError
from .geometry import Point2
from .netsearch import SearchOutcome
from .result import dedupe_consecutive
from .roadnet import RoadNetwork

LETHAL = math.inf


class CellState(IntEnum):
    FREE = 0
    OCCUPIED = 1
    UNKNOWN = 2


@dataclass
class PotentialParams:
    """Gaussian road-potential shape and traversal-cost coupling."""

    p0: float = 100.0             # maximal potential
    sigma: float = 0.5            # m, Gaussian standard deviation
    inflation_radius: float = 0.0  # m, obstacle inflation (robot radius)
    traversal_weight: float = 5.0  # w in step cost = length * (1 + w * p / p0)

    def __post_init__(self):
        if self.p0 <= 0:
            raise MapValidationError("potential_params.p0 must be positive")
        if self.sigma <= 0:
            raise MapValidationError("potential_params.sigma must be positive")
        if self.inflation_radius < 0:
            raise MapValidationError("potential_params.inflation_radius must be >= 0")
        if self.traversal_weight < 0:
            raise MapValidationError("potential_params.traversal_weight must be >= 0")

    def potential_of(self, d):
        """Eq. of the road potential: p0 * (1 - exp(-d^2 / (2 sigma^2)))."""
        d = np.asarray(d, dtype=np.float64)
        return self.p0 * (1.0 - np.exp(-(d * d) / (2.0 * self.sigma * self.sigma)))


@dataclass
class GridFrame:
    """Shared raster geometry. origin is the world position of the corner of
    cell (0, 0) — the top-left of the image — so y decreases with row index."""

    resolution: float
    origin: Point2
    width: int
    height: int

    def __post_init__(self):
        if self.resolution <= 0:
            raise MapValidationError("grid resolution must be positive")
        if self.width < 1 or self.height < 1:
            raise MapValidationError("grid dimensions must be >= 1")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    def cell_xs(self) -> np.ndarray:
        return self.origin.x + (np.arange(self.width) + 0.5) * self.resolution

    def cell_ys(self) -> np.ndarray:
        return self.origin.y - (np.arange(self.height) + 0.5) * self.resolution

    def cell_center(self, row: int, col: int) -> Point2:
        return Point2(
            self.origin.x + (col + 0.5) * self.resolution,
            self.origin.y - (row + 0.5) * self.resolution,
        )

    def contains(self, p: Point2, tol: float = 1e-9) -> bool:
        return (
            self.origin.x - tol <= p.x <= self.origin.x + self.width * self.resolution + tol
            and self.origin.y - self.height * self.resolution - tol <= p.y <= self.origin.y + tol
        )

    def world_to_cell(self, p: Point2) -> tuple[int, int]:
        """Cell containing p; boundary points clamp into the nearest cell."""
        if not self.contains(p):
            raise ValueError(f"point ({p.x}, {p.y}) outside grid frame")
        col = int(math.floor((p.x - self.origin.x) / self.resolution))
        row = int(math.floor((self.origin.y - p.y) / self.resolution))
        return (min(max(row, 0), self.height - 1), min(max(col, 0), self.width - 1))

    def same_geometry(self, other: "GridFrame") -> bool:
        return (
            self.resolution == other.resolution
            and self.origin == other.origin
            and self.width == other.width
            and self.height == other.height
        )


@dataclass
class OccupancyGrid(GridFrame):
    cells: np.ndarray  # (height, width) uint8 of CellState codes

    def __post_init__(self):
        super().__post_init__()
        self.cells = np.asarray(self.cells, dtype=np.uint8)
        if self.cells.shape != (self.height, self.width):
            raise MapValidationError(
                f"occupancy array shape {self.cells.shape} != (height, width) {(self.height, self.width)}"
            )


@dataclass
class PotentialGrid(GridFrame):
    values: np.ndarray  # (height, width) float64, +inf marks lethal cells
    params: PotentialParams

    def __post_init__(self):
        super().__post_init__()
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.height, self.width):
            raise MapValidationError("potential array shape mismatch")

    @property
    def lethal_mask(self) -> np.ndarray:
        return ~np.isfinite(self.values)

    def is_lethal(self, p: Point2) -> bool:
        r, c = self.world_to_cell(p)
        return not math.isfinite(self.values[r, c])


def polygon_raster_mask(frame: GridFrame, polygons: Sequence[Sequence[Point2]]) -> np.ndarray:
    """Boolean (H, W) mask of cell centers inside any polygon.

    Vectorized even-odd crossing test matching geometry.point_in_polygon's
    interior rule (boundary-exact centers are resolved by the rim handling
    of the callers, not here).
    """
    X, Y = np.meshgrid(frame.cell_xs(), frame.cell_ys())
    mask = np.zeros(frame.shape, dtype=bool)
    for poly in polygons:
        inside = np.zeros(frame.shape, dtype=bool)
        n = len(poly)
        for i in range(n):
            a, b = poly[i], poly[(i + 1) % n]
            crosses = (a.y > Y) != (b.y > Y)
            if not crosses.any():
                continue
            denom = b.y - a.y
            x_cross = a.x + (Y - a.y) * (b.x - a.x) / denom
            inside ^= crosses & (X < x_cross)
        mask |= inside
    return mask


def lane_distance_field(frame: GridFrame, net: RoadNetwork) -> np.ndarray:
    """Distance from every cell center to the nearest lane segment (meters)."""
    segs = np.asarray(net.segments_array(), dtype=np.float64)
    return kernels.min_segment_distance_field(frame.cell_xs(), frame.cell_ys(), segs)


def build_static_layer(
    grid: OccupancyGrid,
    inflation_radius: float,
    passable_polygons: Sequence[Sequence[Point2]],
    params: PotentialParams | None = None,
) -> PotentialGrid:
    """Lethal layer: inflated obstacles plus everything outside the passable
    area. Unknown cells are treated as obstacles. Non-lethal cells are 0."""
    params = params or PotentialParams(inflation_radius=inflation_radius)
    values = np.zeros(grid.shape, dtype=np.float64)
    obstacle = (grid.cells == CellState.OCCUPIED) | (grid.cells == CellState.UNKNOWN)
    if obstacle.any():
        dist = ndimage.distance_transform_edt(~obstacle, sampling=grid.resolution)
        values[dist <= inflation_radius + 1e-12] = LETHAL
    if passable_polygons:
        values[~polygon_raster_mask(grid, passable_polygons)] = LETHAL
    return PotentialGrid(grid.resolution, grid.origin, grid.width, grid.height, values, params)


def build_semantic_layer(
    grid: GridFrame,
    passable_polygons: Sequence[Sequence[Point2]],
    net: RoadNetwork,
    params: PotentialParams,
    distance_field: np.ndarray | None = None,
) -> PotentialGrid:
    """Gaussian road-proximity layer over the passable area.

    Cells outside the passable area are 0; the one-cell rim where the
    passable area meets non-passable space is pinned to exactly p0 (the
    boundary carries maximal potential even where the Gaussian has not yet
    saturated). A precomputed lane distance field may be passed to avoid
    recomputation.
    """
    if distance_field is None:
        distance_field = lane_distance_field(grid, net)
    passable = polygon_raster_mask(grid, passable_polygons)
    values = np.zeros(grid.shape, dtype=np.float64)
    values[passable] = params.potential_of(distance_field[passable])
    rim = passable & ~ndimage.binary_erosion(passable, structure=np.ones((3, 3), dtype=bool))
    values[rim] = params.p0
    return PotentialGrid(grid.resolution, grid.origin, grid.width, grid.height, values, params)


def combine_layers(static: PotentialGrid, semantic: PotentialGrid) -> PotentialGrid:
    """Per-cell maximum; lethal (+inf) absorbs."""
    if not static.same_geometry(semantic):
        raise MapValidationError("combine_layers: grid geometries differ")
    return PotentialGrid(
        static.resolution,
        static.origin,
        static.width,
        static.height,
        np.maximum(static.values, semantic.values),
        semantic.params,
    )


def run_grid_search(
    m: PotentialGrid,
    start: Point2,
    goal: Point2,
    cost_mult: np.ndarray,
    cost_add: np.ndarray,
) -> SearchOutcome:
    """Shared grid-search driver: endpoint checks, kernel call, world-space
    path with exact endpoints. cost_mult/cost_add follow the kernel contract."""
    for p, exc, label in ((start, StartBlockedError, "start"), (goal, GoalBlockedError, "goal")):
        if not m.contains(p):
            raise exc(f"{label} ({p.x}, {p.y}) outside the costmap")
    start_rc = m.world_to_cell(start)
    goal_rc = m.world_to_cell(goal)
    if not math.isfinite(m.values[start_rc]):
        raise StartBlockedError(f"start ({start.x}, {start.y}) is on a lethal cell")
    if not math.isfinite(m.values[goal_rc]):
        raise GoalBlockedError(f"goal ({goal.x}, {goal.y}) is on a lethal cell")

    blocked = m.lethal_mask.astype(np.uint8)
    found, cost, path_rc, expansions = kernels.grid_shortest_path(
        cost_mult, cost_add, blocked, start_rc, goal_rc, m.resolution
    )
    if not found:
        raise NoRouteError(f"no grid route from ({start.x}, {start.y}) to ({goal.x}, {goal.y})")
    points = [m.cell_center(int(r), int(c)) for r, c in path_rc]
    points[0] = start
    points[-1] = goal
    if len(points) == 1 and start.distance_to(goal) > 0:
        points = [start, goal]
    points = dedupe_consecutive(points)
    length = sum(points[i].distance_to(points[i + 1]) for i in range(len(points) - 1))
    return SearchOutcome(True, points, length, expansions, cost=cost)


def grid_dijkstra(m: PotentialGrid, start: Point2, goal: Point2) -> SearchOutcome:
    """8-connected Dijkstra on the potential map.

    Entering a cell of potential p over a step of length s costs
    s * (1 + w * p / p0); the returned cost is that objective while
    path_length is the geometric length of the emitted path.
    """
    finite = np.where(np.isfinite(m.values), m.values, 0.0)
    mult = 1.0 + m.params.traversal_weight * finite / m.params.p0
    add = np.zeros(m.shape, dtype=np.float64)
    return run_grid_search(m, start, goal, mult, add)
