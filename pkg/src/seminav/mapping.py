"""Start/goal projection onto the road network.

A query point is matched against its closest lane and every reverse lane of
that closest lane, so a point sitting beside an opposing lane can splice
into it directly — the road-cutting shortcut permitted at path endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .errors import EmptyNetworkError
from .geometry import Point2, SegmentRegion, project_point_onto_segment
from .roadnet import RoadNetwork


class SpliceKind(Enum):
    AT_START_NODE = "at_start_node"
    AT_END_NODE = "at_end_node"
    INTERIOR = "interior"


@dataclass(frozen=True)
class MatchCandidate:
    """A mapped query point: where on which lane to splice into the network."""

    point: Point2
    lane_id: int
    splice: SpliceKind
    param_t: float           # in (0, 1) for INTERIOR, 0.0 / 1.0 otherwise
    connector_length: float  # straight-line distance from the query point

    def key(self) -> tuple:
        return (self.lane_id, self.splice, round(self.param_t, 12))


@dataclass(frozen=True)
class CandidateSet:
    candidates: tuple[MatchCandidate, ...]

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self):
        return len(self.candidates)


ConnectorFilter = Optional[Callable[[Point2, Point2], bool]]


def candidate_lanes(p: Point2, net: RoadNetwork, include_reverse: bool = True) -> list[int]:
    """Ids of the closest lane plus (optionally) its reverse lanes.

    Ordered closest-first, then ascending id, for deterministic candidate
    generation downstream.
    """
    closest = net.closest_lane(p)  # raises EmptyNetworkError on empty net
    ids = [closest.id]
    if include_reverse:
        ids.extend(sorted(closest.reverse_ids))
    return ids


def _splice_on_lane(net: RoadNetwork, lane_id: int, region_t: float) -> tuple[SpliceKind, float, Point2]:
    lane = net.lane(lane_id)
    if region_t <= 0.0:
        return SpliceKind.AT_START_NODE, 0.0, lane.start
    if region_t >= 1.0:
        return SpliceKind.AT_END_NODE, 1.0, lane.end
    point = Point2(
        lane.start.x + region_t * (lane.end.x - lane.start.x),
        lane.start.y + region_t * (lane.end.y - lane.start.y),
    )
    return SpliceKind.INTERIOR, region_t, point


def _node_candidate(p: Point2, net: RoadNetwork, lane_id: int, at_start: bool) -> MatchCandidate:
    lane = net.lane(lane_id)
    point = lane.start if at_start else lane.end
    kind = SpliceKind.AT_START_NODE if at_start else SpliceKind.AT_END_NODE
    return MatchCandidate(point, lane_id, kind, 0.0 if at_start else 1.0, p.distance_to(point))


def _dedup(cands: list[MatchCandidate]) -> CandidateSet:
    out: list[MatchCandidate] = []
    seen: set[tuple] = set()
    for c in cands:
        if c.key() not in seen:
            seen.add(c.key())
            out.append(c)
    return CandidateSet(tuple(out))


def map_start_point(
    p_s: Point2,
    net: RoadNetwork,
    include_reverse: bool = True,
    connector_ok: ConnectorFilter = None,
) -> CandidateSet:
    """Matched start points on each candidate lane.

    Per lane: a point before the segment maps to the lane's start node, a
    point beside it to its orthogonal projection, and a point past the end
    maps onto the start node of every successor lane (the lane's own end
    node when it has no successors) — so the path never doubles back
    through a sharp turn at the matched point.
    """
    cands: list[MatchCandidate] = []
    for lane_id in candidate_lanes(p_s, net, include_reverse):
        lane = net.lane(lane_id)
        proj = project_point_onto_segment(p_s, lane.start, lane.end)
        if proj.region is SegmentRegion.BEFORE:
            cands.append(_node_candidate(p_s, net, lane_id, at_start=True))
        elif proj.region is SegmentRegion.WITHIN:
            kind, t, point = _splice_on_lane(net, lane_id, proj.param_t)
            cands.append(MatchCandidate(point, lane_id, kind, t, p_s.distance_to(point)))
        else:  # AFTER: jump to the successors' entry nodes
            if lane.to_ids:
                for succ_id in sorted(lane.to_ids):
                    cands.append(_node_candidate(p_s, net, succ_id, at_start=True))
            else:
                cands.append(_node_candidate(p_s, net, lane_id, at_start=False))
    if connector_ok is not None:
        kept = [c for c in cands if connector_ok(p_s, c.point)]
        if kept:
            cands = kept
    if not cands:
        raise EmptyNetworkError("no start candidates found")
    return _dedup(cands)


def map_goal_point(
    p_g: Point2,
    net: RoadNetwork,
    include_reverse: bool = True,
    connector_ok: ConnectorFilter = None,
) -> CandidateSet:
    """Matched goal points; mirror of map_start_point.

    A point past the lane's end maps to the end node, a point beside it to
    its projection, and a point before the start maps onto the end node of
    every predecessor lane (the lane's own start node when it has none).
    """
    cands: list[MatchCandidate] = []
    for lane_id in candidate_lanes(p_g, net, include_reverse):
        lane = net.lane(lane_id)
        proj = project_point_onto_segment(p_g, lane.start, lane.end)
        if proj.region is SegmentRegion.AFTER:
            cands.append(_node_candidate(p_g, net, lane_id, at_start=False))
        elif proj.region is SegmentRegion.WITHIN:
            kind, t, point = _splice_on_lane(net, lane_id, proj.param_t)
            cands.append(MatchCandidate(point, lane_id, kind, t, p_g.distance_to(point)))
        else:  # BEFORE: arrive via the predecessors' exit nodes
            if lane.from_ids:
                for pred_id in sorted(lane.from_ids):
                    cands.append(_node_candidate(p_g, net, pred_id, at_start=False))
            else:
                cands.append(_node_candidate(p_g, net, lane_id, at_start=True))
    if connector_ok is not None:
        kept = [c for c in cands if connector_ok(p_g, c.point)]
        if kept:
            cands = kept
    if not cands:
        raise EmptyNetworkError("no goal candidates found")
    return _dedup(cands)
