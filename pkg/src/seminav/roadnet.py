"""Unidirectional road network construction.

Lanes are straight two-node segments. Successor/predecessor relations come
from an endpoint proximity + heading-alignment test, reverse (opposing)
lanes from a per-node closest-opposing-lane scan, and the directed graph is
the union of intra-lane edges and end-to-start connector edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import EmptyNetworkError, MapValidationError
from .geometry import (
    Point2,
    Pose2,
    angle_diff,
    heading_of,
    point_segment_distance,
    project_point_onto_segment,
    segments_intersect,
)


@dataclass
class LinkParams:
    """Thresholds for lane linking and reverse-lane discovery."""

    alpha_min: float = 0.52        # rad, max heading gap for from/to links
    d_min: float = 0.5             # m, max endpoint gap for from/to links
    theta_threshold: float = 3 * math.pi / 4  # rad, min heading opposition for reverse
    d_threshold: float = 6.0       # m, max lateral offset for reverse

    def __post_init__(self):
        for name in ("alpha_min", "d_min", "theta_threshold", "d_threshold"):
            if getattr(self, name) <= 0:
                raise MapValidationError(f"link_params.{name} must be positive")
        if not (math.pi / 2 < self.theta_threshold < math.pi):
            raise MapValidationError("link_params.theta_threshold must lie in (pi/2, pi)")


@dataclass
class Lane:
    """A straight one-way lane from start to end.

    Node headings equal the lane heading; the relation sets are populated by
    link_lanes / find_reverse_lanes.
    """

    id: int
    start: Point2
    end: Point2
    from_ids: set[int] = field(default_factory=set)
    to_ids: set[int] = field(default_factory=set)
    reverse_ids: set[int] = field(default_factory=set)

    def __post_init__(self):
        if self.start.x == self.end.x and self.start.y == self.end.y:
            raise MapValidationError(f"lane {self.id}: start equals end at ({self.start.x}, {self.start.y})")

    @property
    def heading(self) -> float:
        return heading_of(self.start, self.end)

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)

    @property
    def start_node(self) -> Pose2:
        return Pose2(self.start, self.heading)

    @property
    def end_node(self) -> Pose2:
        return Pose2(self.end, self.heading)


def link_lanes(lanes: list[Lane], params: LinkParams) -> list[Lane]:
    """Populate from_ids/to_ids: L_j succeeds L_i when L_j's start node sits
    within d_min of L_i's end node with headings aligned within alpha_min."""
    seen: set[int] = set()
    for lane in lanes:
        if lane.id in seen:
            raise MapValidationError(f"duplicate lane id {lane.id}")
        seen.add(lane.id)
        lane.from_ids.clear()
        lane.to_ids.clear()
    for li in lanes:
        for lj in lanes:
            if li.id == lj.id:
                continue
            if abs(angle_diff(lj.heading, li.heading)) >= params.alpha_min:
                continue
            if lj.start.distance_to(li.end) >= params.d_min:
                continue
            li.to_ids.add(lj.id)
            lj.from_ids.add(li.id)
    return lanes


def find_reverse_lanes(lanes: list[Lane], params: LinkParams) -> list[Lane]:
    """Populate reverse_ids via the per-node closest-opposing-lane scan.

    For each node of each lane, candidate lanes must not be predecessors,
    successors, or geometric intersectors; their heading must oppose the
    node's by more than theta_threshold; the node must project strictly
    within the candidate segment; and the lateral offset must stay under
    d_threshold. The minimal-offset candidate is paired symmetrically.
    """
    for lane in lanes:
        lane.reverse_ids.clear()
    by_id = {lane.id: lane for lane in lanes}
    for li in lanes:
        for node in (li.start, li.end):
            best_abs_d = math.inf
            best_id = None
            for lj in lanes:
                if lj.id == li.id:
                    continue
                if lj.id in li.from_ids or lj.id in li.to_ids:
                    continue
                if segments_intersect(li.start, li.end, lj.start, lj.end):
                    continue
                if abs(angle_diff(li.heading, lj.heading)) <= params.theta_threshold:
                    continue
                px, py = lj.end.x - lj.start.x, lj.end.y - lj.start.y
                p0x, p0y = node.x - lj.start.x, node.y - lj.start.y
                p1x, p1y = node.x - lj.end.x, node.y - lj.end.y
                if not (px * p0x + py * p0y > 0.0 and px * p1x + py * p1y < 0.0):
                    continue
                abs_d = abs(p0x * py - p0y * px) / math.hypot(px, py)
                if abs_d >= params.d_threshold:
                    continue
                if abs_d < best_abs_d:
                    best_abs_d = abs_d
                    best_id = lj.id
            if best_id is not None:
                li.reverse_ids.add(best_id)
                by_id[best_id].reverse_ids.add(li.id)
    return lanes


class RoadNetwork:
    """Directed graph over lane endpoints; immutable once built.

    Node ids: lane at index k contributes start node 2k and end node 2k+1.
    Edges: every lane's start->end plus end->start connectors to each
    successor lane, weighted by Euclidean distance.
    """

    def __init__(self, lanes: list[Lane], params: LinkParams):
        self.lanes: list[Lane] = list(lanes)
        self.params = params
        self._index_of = {lane.id: k for k, lane in enumerate(self.lanes)}
        if len(self._index_of) != len(self.lanes):
            raise MapValidationError("duplicate lane ids in network")
        self.nodes: list[Pose2] = []
        for lane in self.lanes:
            self.nodes.append(lane.start_node)
            self.nodes.append(lane.end_node)
        self.edges: list[list[tuple[int, float]]] = [[] for _ in self.nodes]
        for k, lane in enumerate(self.lanes):
            self.edges[2 * k].append((2 * k + 1, lane.length))
            for succ_id in sorted(lane.to_ids):
                j = self._index_of[succ_id]
                weight = lane.end.distance_to(self.lanes[j].start)
                self.edges[2 * k + 1].append((2 * j, weight))

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return sum(len(adj) for adj in self.edges)

    def neighbors(self, node_id: int) -> list[tuple[int, float]]:
        return self.edges[node_id]

    def node_point(self, node_id: int) -> Point2:
        return self.nodes[node_id].position

    def lane(self, lane_id: int) -> Lane:
        return self.lanes[self._index_of[lane_id]]

    def lane_index(self, lane_id: int) -> int:
        return self._index_of[lane_id]

    def lane_node_ids(self, lane_id: int) -> tuple[int, int]:
        k = self._index_of[lane_id]
        return 2 * k, 2 * k + 1

    def closest_lane(self, p: Point2) -> Lane:
        """Lane minimizing point-to-segment distance; ties go to the lowest id."""
        if not self.lanes:
            raise EmptyNetworkError("network has no lanes")
        best = None
        best_key = None
        for lane in self.lanes:
            key = (point_segment_distance(p, lane.start, lane.end), lane.id)
            if best_key is None or key < best_key:
                best_key = key
                best = lane
        return best

    def lane_offset(self, p: Point2, lane: Lane) -> float:
        """Perpendicular line distance from p to the lane (unsigned)."""
        return abs(project_point_onto_segment(p, lane.start, lane.end).signed_distance)

    def segments_array(self):
        """Lane segments as an (n, 4) list of (x1, y1, x2, y2) rows."""
        return [(l.start.x, l.start.y, l.end.x, l.end.y) for l in self.lanes]


def build_network(lanes: list[Lane], params: LinkParams | None = None) -> RoadNetwork:
    """Assemble the directed graph from already-linked lanes."""
    return RoadNetwork(lanes, params or LinkParams())


def network_from_lanes(lanes: list[Lane], params: LinkParams | None = None) -> RoadNetwork:
    """Full pipeline: link successors/predecessors, find reverse lanes, build graph."""
    params = params or LinkParams()
    link_lanes(lanes, params)
    find_reverse_lanes(lanes, params)
    return build_network(lanes, params)
