"""Performance indexes for planned paths.

Per-point deviations are measured against the point's closest lane
(point-to-segment distance, ties to the lowest lane id): the distance
deviation uses the perpendicular line distance even beyond the segment's
ends, the direction deviation compares the path heading with the lane
heading. Timing averages repeated identical planning cycles.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .geometry import Point2, Pose2, angle_diff, polyline_length
from .result import PlanResult
from .roadnet import RoadNetwork


@dataclass(frozen=True)
class MetricsReport:
    t: float        # s, mean planning time over the cycles
    l: float        # m, path length
    d_e: float      # m, mean |distance to closest lane|
    theta_e: float  # rad, mean |heading gap to closest lane|
    j_cost: float   # l + sum|d_i| + sum|dtheta_i| (unit weights)


def _points(path: Sequence) -> list[Point2]:
    return [p.position if isinstance(p, Pose2) else p for p in path]


def path_length(path: Sequence) -> float:
    """Sum of Euclidean segment lengths; 0 for a single point."""
    return polyline_length(_points(path))


def _deviations(path: Sequence, net: RoadNetwork) -> tuple[list[float], list[float]]:
    """Per-point (|d_i|, |dtheta_i|) against each point's closest lane."""
    abs_d: list[float] = []
    abs_dtheta: list[float] = []
    for item in path:
        if isinstance(item, Pose2):
            p, heading = item.position, item.heading
        else:
            p, heading = item, 0.0
        lane = net.closest_lane(p)
        abs_d.append(net.lane_offset(p, lane))
        abs_dtheta.append(abs(angle_diff(heading, lane.heading)))
    return abs_d, abs_dtheta


def distance_deviation(path: Sequence, net: RoadNetwork) -> float:
    """Mean perpendicular distance from path points to their closest lanes."""
    if not path:
        raise ValueError("empty path")
    abs_d, _ = _deviations(path, net)
    return sum(abs_d) / len(abs_d)


def direction_deviation(path: Sequence[Pose2], net: RoadNetwork) -> float:
    """Mean absolute heading gap between path points and their closest lanes."""
    if not path:
        raise ValueError("empty path")
    _, abs_dtheta = _deviations(path, net)
    return sum(abs_dtheta) / len(abs_dtheta)


PlannerFn = Callable[..., PlanResult]


def timed_plan(planner: PlannerFn, p_s: Point2, p_g: Point2, smap, cycles: int = 100) -> MetricsReport:
    """Run planner(p_s, p_g, smap) `cycles` times sequentially; report the
    mean wall-clock time and the quality metrics of the (deterministic)
    final path. Planner errors propagate on the first cycle."""
    if cycles < 1:
        raise ValueError("cycles must be >= 1")
    total = 0.0
    result: PlanResult | None = None
    for _ in range(cycles):
        t0 = time.perf_counter()
        result = planner(p_s, p_g, smap)
        total += time.perf_counter() - t0
    assert result is not None
    abs_d, abs_dtheta = _deviations(result.path, smap.network)
    n = len(abs_d)
    return MetricsReport(
        t=total / cycles,
        l=result.length,
        d_e=sum(abs_d) / n,
        theta_e=sum(abs_dtheta) / n,
        j_cost=result.length + sum(abs_d) + sum(abs_dtheta),
    )
