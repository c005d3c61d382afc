"""Top-level planning: region classification, case dispatch, path assembly.

Endpoints in passages or parking areas plan over the sparse road network
with shortcut mapping; endpoints inside intersections use the two-layer
potential map for the in-intersection stretches; mixed queries combine the
two. The final path is densified to a uniform spacing with headings from
forward differences.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    MapValidationError,
    NoRouteError,
    OffMapGoalError,
    OffMapStartError,
)
from .geometry import (
    Point2,
    Pose2,
    point_in_polygon,
    point_segment_distance,
    polygon_is_simple,
)
from .mapping import map_goal_point, map_start_point
from .netsearch import (
    SearchBudget,
    SplicedNetwork,
    dijkstra_network,
    plan_case1,
)
from .potential import (
    OccupancyGrid,
    PotentialGrid,
    PotentialParams,
    build_semantic_layer,
    build_static_layer,
    combine_layers,
    grid_dijkstra,
    lane_distance_field,
)
from .result import PlanCase, PlanResult, dedupe_consecutive, make_result, poses_from_points
from .roadnet import LinkParams, RoadNetwork


class RegionKind(Enum):
    PASSAGE = "passage"
    INTERSECTION = "intersection"
    PARKING = "parking"
    OFF_MAP = "off_map"


@dataclass(frozen=True)
class Region:
    name: str
    polygon: tuple[Point2, ...]

    def __post_init__(self):
        if not polygon_is_simple(self.polygon):
            raise MapValidationError(f"region '{self.name}': polygon is not simple")

    def contains(self, p: Point2) -> bool:
        return point_in_polygon(p, self.polygon)


@dataclass(frozen=True)
class PointClass:
    kind: RegionKind
    region_name: str | None = None


class IntersectionSide(Enum):
    EXIT = "exit"    # lane start nodes: where paths leave the intersection
    ENTRY = "entry"  # lane end nodes: where paths arrive


class SemanticMap:
    """Immutable bundle of regions, occupancy, network, and parameters.

    Potential layers and the lane distance field are built lazily and
    cached; passage-only planning never pays for them.
    """

    def __init__(
        self,
        passages: Sequence[Region],
        intersections: Sequence[Region],
        parking_areas: Sequence[Region],
        occupancy: OccupancyGrid,
        network: RoadNetwork,
        potential_params: PotentialParams | None = None,
        link_params: LinkParams | None = None,
        resample_spacing: float = 0.25,
        robot_radius: float = 0.0,
    ):
        self.passages = tuple(passages)
        self.intersections = tuple(intersections)
        self.parking_areas = tuple(parking_areas)
        self.occupancy = occupancy
        self.network = network
        self.potential_params = potential_params or PotentialParams(inflation_radius=robot_radius)
        self.link_params = link_params or network.params
        self.resample_spacing = resample_spacing
        self.robot_radius = robot_radius
        if resample_spacing <= 0:
            raise MapValidationError("resample_spacing must be positive")
        self._validate()

    def _validate(self):
        passable = self.passable_polygons
        for lane in self.network.lanes:
            for label, p in (("start", lane.start), ("end", lane.end)):
                if not any(point_in_polygon(p, poly) for poly in passable):
                    raise MapValidationError(
                        f"lane {lane.id} {label} node ({p.x}, {p.y}) lies outside every passable polygon"
                    )

    @property
    def passable_polygons(self) -> list[tuple[Point2, ...]]:
        return [r.polygon for r in (*self.passages, *self.intersections, *self.parking_areas)]

    @cached_property
    def lane_distances(self) -> np.ndarray:
        return lane_distance_field(self.occupancy, self.network)

    @cached_property
    def static_layer(self) -> PotentialGrid:
        return build_static_layer(
            self.occupancy,
            self.potential_params.inflation_radius,
            self.passable_polygons,
            self.potential_params,
        )

    @cached_property
    def semantic_layer(self) -> PotentialGrid:
        return build_semantic_layer(
            self.occupancy,
            self.passable_polygons,
            self.network,
            self.potential_params,
            distance_field=self.lane_distances,
        )

    @cached_property
    def potential_map(self) -> PotentialGrid:
        return combine_layers(self.static_layer, self.semantic_layer)


def classify_point(p: Point2, smap: SemanticMap) -> PointClass:
    """Region of a point, priority intersection > parking > passage."""
    for region in smap.intersections:
        if region.contains(p):
            return PointClass(RegionKind.INTERSECTION, region.name)
    for region in smap.parking_areas:
        if region.contains(p):
            return PointClass(RegionKind.PARKING, region.name)
    for region in smap.passages:
        if region.contains(p):
            return PointClass(RegionKind.PASSAGE, region.name)
    return PointClass(RegionKind.OFF_MAP)


def find_intersected_points(
    region: Region,
    net: RoadNetwork,
    side: IntersectionSide,
    epsilon: float = 0.05,
) -> set[int]:
    """Network nodes where lanes meet the intersection polygon.

    EXIT collects lane start nodes (a path can only leave the intersection
    along a lane's direction of travel), ENTRY collects lane end nodes.
    Membership means inside the polygon or within epsilon of its boundary.
    """
    nodes: set[int] = set()
    for lane in net.lanes:
        start_id, end_id = net.lane_node_ids(lane.id)
        node_id, p = (start_id, lane.start) if side is IntersectionSide.EXIT else (end_id, lane.end)
        if point_in_polygon(p, region.polygon) or _boundary_distance(p, region.polygon) <= epsilon:
            nodes.add(node_id)
    return nodes


def _boundary_distance(p: Point2, poly: Sequence[Point2]) -> float:
    n = len(poly)
    return min(point_segment_distance(p, poly[i], poly[(i + 1) % n]) for i in range(n))


def resample_path(points: Sequence[Point2], spacing: float) -> list[Pose2]:
    """Densify a polyline to at most `spacing` between consecutive points.

    Original vertices (hence corners and endpoints) are kept exactly; each
    segment is split into equal pieces, so total length is preserved and
    every emitted point lies on the input polyline.
    """
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    pts = dedupe_consecutive(list(points))
    if len(pts) <= 1:
        return poses_from_points(pts)
    dense: list[Point2] = [pts[0]]
    for a, b in zip(pts, pts[1:]):
        seg_len = a.distance_to(b)
        pieces = max(1, math.ceil(seg_len / spacing - 1e-12))
        for k in range(1, pieces):
            f = k / pieces
            dense.append(Point2(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)))
        dense.append(b)
    return poses_from_points(dense)


def _intersection_of(cls: PointClass, smap: SemanticMap) -> Region:
    for region in smap.intersections:
        if region.name == cls.region_name:
            return region
    raise KeyError(cls.region_name)


def _grid_subpath(smap: SemanticMap, a: Point2, b: Point2) -> list[Point2]:
    if a.distance_to(b) == 0.0:
        return [a]
    return grid_dijkstra(smap.potential_map, a, b).path


def plan_case2(p_s: Point2, p_g: Point2, smap: SemanticMap, use_budget: bool = True) -> PlanResult:
    """Both endpoints in distinct intersections: pick the shortest network
    path between the intersections' exit/entry nodes (branch-and-bound over
    pairs), then bridge each end to its node over the potential map."""
    t0 = time.perf_counter()
    cls_s = classify_point(p_s, smap)
    cls_g = classify_point(p_g, smap)
    region_s = _intersection_of(cls_s, smap)
    region_g = _intersection_of(cls_g, smap)
    net = smap.network
    eps = smap.occupancy.resolution
    exits = find_intersected_points(region_s, net, IntersectionSide.EXIT, eps)
    entries = find_intersected_points(region_g, net, IntersectionSide.ENTRY, eps)
    if not exits or not entries:
        raise NoRouteError(
            f"intersection '{region_s.name if not exits else region_g.name}' touches no usable lane nodes"
        )
    max_cost = 2 * net.num_nodes if use_budget else None
    min_length = float("inf")
    best = None
    for src in sorted(exits):
        for dst in sorted(entries):
            budget = SearchBudget(max_cost) if max_cost is not None else None
            outcome = dijkstra_network(net, src, dst, budget)
            if not outcome.success:
                continue
            if outcome.path_length < min_length:
                min_length = outcome.path_length
                best = outcome
                if use_budget:
                    max_cost = 2 * outcome.search_cost
    if best is None:
        raise NoRouteError(f"no network route between intersections '{region_s.name}' and '{region_g.name}'")
    p_st = best.path[0]
    p_gt = best.path[-1]
    head = _grid_subpath(smap, p_s, p_st)
    tail = _grid_subpath(smap, p_gt, p_g)
    points = dedupe_consecutive([*head, *best.path, *tail])
    result = make_result(points, PlanCase.INTERSECTION_TO_INTERSECTION)
    result.planning_time = time.perf_counter() - t0
    return result


def _plan_mixed(
    p_s: Point2,
    p_g: Point2,
    smap: SemanticMap,
    cls_s: PointClass,
    cls_g: PointClass,
    use_budget: bool,
    include_reverse: bool,
) -> PlanResult:
    """One endpoint in an intersection, the other in a passage/parking area:
    loop (intersection node x mapped candidate) pairs with the budget scheme,
    then bridge the intersection side over the potential map."""
    net = smap.network
    eps = smap.occupancy.resolution
    start_in_intersection = cls_s.kind is RegionKind.INTERSECTION
    if start_in_intersection:
        region = _intersection_of(cls_s, smap)
        inters_nodes = sorted(find_intersected_points(region, net, IntersectionSide.EXIT, eps))
        cands = map_goal_point(p_g, net, include_reverse)
    else:
        region = _intersection_of(cls_g, smap)
        inters_nodes = sorted(find_intersected_points(region, net, IntersectionSide.ENTRY, eps))
        cands = map_start_point(p_s, net, include_reverse)
    if not inters_nodes:
        raise NoRouteError(f"intersection '{region.name}' touches no usable lane nodes")

    max_cost = 2 * net.num_nodes if use_budget else None
    min_total = float("inf")
    best = None
    ordered = sorted(cands, key=lambda c: (c.connector_length, c.lane_id, c.splice.value, c.param_t))
    for node_id in inters_nodes:
        for cand in ordered:
            view = SplicedNetwork(net)
            cand_node = view.splice(cand)
            src, dst = (node_id, cand_node) if start_in_intersection else (cand_node, node_id)
            budget = SearchBudget(max_cost) if max_cost is not None else None
            outcome = dijkstra_network(view, src, dst, budget)
            if not outcome.success:
                continue
            total = outcome.path_length + cand.connector_length
            if total < min_total:
                min_total = total
                best = outcome
                if use_budget:
                    max_cost = 2 * outcome.search_cost
    if best is None:
        raise NoRouteError(f"no mixed route between ({p_s.x}, {p_s.y}) and ({p_g.x}, {p_g.y})")

    if start_in_intersection:
        head = _grid_subpath(smap, p_s, best.path[0])
        points = [*head, *best.path, p_g]
    else:
        tail = _grid_subpath(smap, best.path[-1], p_g)
        points = [p_s, *best.path, *tail]
    return make_result(dedupe_consecutive(points), PlanCase.MIXED)


def plan(
    p_s: Point2,
    p_g: Point2,
    smap: SemanticMap,
    use_budget: bool = True,
    include_reverse: bool = True,
) -> PlanResult:
    """Dispatch on endpoint regions, plan, and resample to uniform spacing.

    include_reverse=False disables the road-cutting shortcut (strict
    compliance with lane directions at the endpoints).
    """
    t0 = time.perf_counter()
    cls_s = classify_point(p_s, smap)
    cls_g = classify_point(p_g, smap)
    if cls_s.kind is RegionKind.OFF_MAP:
        raise OffMapStartError(f"start ({p_s.x}, {p_s.y}) lies outside every mapped region")
    if cls_g.kind is RegionKind.OFF_MAP:
        raise OffMapGoalError(f"goal ({p_g.x}, {p_g.y}) lies outside every mapped region")

    if p_s.distance_to(p_g) == 0.0:
        case = (
            PlanCase.SAME_INTERSECTION
            if cls_s.kind is RegionKind.INTERSECTION
            else PlanCase.PASSAGE_TO_PASSAGE
        )
        result = make_result([p_s], case)
    elif cls_s.kind is not RegionKind.INTERSECTION and cls_g.kind is not RegionKind.INTERSECTION:
        result = plan_case1(p_s, p_g, smap.network, use_budget, include_reverse)
    elif cls_s.kind is RegionKind.INTERSECTION and cls_g.kind is RegionKind.INTERSECTION:
        if cls_s.region_name == cls_g.region_name:
            outcome = grid_dijkstra(smap.potential_map, p_s, p_g)
            result = make_result(outcome.path, PlanCase.SAME_INTERSECTION)
        else:
            result = plan_case2(p_s, p_g, smap, use_budget)
    else:
        result = _plan_mixed(p_s, p_g, smap, cls_s, cls_g, use_budget, include_reverse)

    result.path = resample_path(result.points(), smap.resample_spacing)
    result.length = sum(
        a.position.distance_to(b.position) for a, b in zip(result.path, result.path[1:])
    )
    result.planning_time = time.perf_counter() - t0
    return result
