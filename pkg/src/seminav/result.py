"""Plan result container shared by the network planner and the baselines."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import Point2, Pose2, heading_of, polyline_length


class PlanCase(Enum):
    PASSAGE_TO_PASSAGE = "passage2passage"
    INTERSECTION_TO_INTERSECTION = "intersection2intersection"
    MIXED = "mixed"
    SAME_INTERSECTION = "same_intersection"
    FREE_GRID = "free_grid"  # baseline planners, no case dispatch


@dataclass
class PlanResult:
    path: list[Pose2]
    length: float
    planning_time: float
    case: PlanCase

    def points(self) -> list[Point2]:
        return [pose.position for pose in self.path]


def poses_from_points(points: list[Point2]) -> list[Pose2]:
    """Assign forward-difference headings; the last point copies its
    predecessor, a single point gets heading 0."""
    if not points:
        return []
    if len(points) == 1:
        return [Pose2(points[0], 0.0)]
    poses = []
    for i in range(len(points) - 1):
        poses.append(Pose2(points[i], heading_of(points[i], points[i + 1])))
    poses.append(Pose2(points[-1], poses[-1].heading))
    return poses


def dedupe_consecutive(points: list[Point2], tol: float = 1e-12) -> list[Point2]:
    """Drop consecutive duplicates (within tol) without reordering."""
    out: list[Point2] = []
    for p in points:
        if not out or out[-1].distance_to(p) > tol:
            out.append(p)
    return out


def make_result(points: list[Point2], case: PlanCase, planning_time: float = 0.0) -> PlanResult:
    pts = dedupe_consecutive(points)
    return PlanResult(
        path=poses_from_points(pts),
        length=polyline_length(pts),
        planning_time=planning_time,
        case=case,
    )
