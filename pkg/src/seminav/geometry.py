"""Planar vector primitives: points, poses, projections, angle arithmetic.

All coordinates are meters in a y-up world frame; all angles are radians
normalized to (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

TWO_PI = math.tau


class GeometryError(ValueError):
    """Degenerate geometric input (zero-length segment, bad polygon)."""


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def normalize_angle(angle: float) -> float:
    """Wrap an angle into (-pi, pi]; exactly pi maps to +pi, never -pi."""
    wrapped = angle % TWO_PI
    if wrapped > math.pi:
        wrapped -= TWO_PI
    return wrapped


@dataclass(frozen=True)
class Pose2:
    position: Point2
    heading: float

    def __post_init__(self):
        if not math.isfinite(self.heading):
            raise GeometryError(f"non-finite heading {self.heading}")
        object.__setattr__(self, "heading", normalize_angle(self.heading))

    @property
    def x(self) -> float:
        return self.position.x

    @property
    def y(self) -> float:
        return self.position.y


class SegmentRegion(Enum):
    BEFORE = "before"
    WITHIN = "within"
    AFTER = "after"


@dataclass(frozen=True)
class SegmentProjection:
    """Result of projecting a point onto a directed segment a->b.

    ``signed_distance`` is the perpendicular distance to the infinite line
    (sign from the cross product, negative on the right of travel);
    ``param_t`` is the unclamped projection parameter, ``foot`` the clamped
    closest point on the segment.
    """

    region: SegmentRegion
    foot: Point2
    signed_distance: float
    param_t: float


def angle_diff(a: float, b: float) -> float:
    """Wrapped difference a - b in (-pi, pi]; antipodal inputs give +pi."""
    return normalize_angle(a - b)


def heading_of(a: Point2, b: Point2) -> float:
    """Direction of travel from a to b."""
    return math.atan2(b.y - a.y, b.x - a.x)


def project_point_onto_segment(p: Point2, a: Point2, b: Point2) -> SegmentProjection:
    """Classify p against segment a->b and project it.

    Region follows the dot-product split on P0 = p-a, P1 = p-b, P = b-a:
    BEFORE when P0.P < 0, AFTER when P.P1 > 0, WITHIN otherwise (ties fall
    to WITHIN so endpoint-coincident points project onto themselves).
    """
    px, py = b.x - a.x, b.y - a.y
    seg_len_sq = px * px + py * py
    if seg_len_sq == 0.0:
        raise GeometryError(f"degenerate segment at ({a.x}, {a.y})")
    p0x, p0y = p.x - a.x, p.y - a.y
    p1x, p1y = p.x - b.x, p.y - b.y

    dot0 = p0x * px + p0y * py
    dot1 = px * p1x + py * p1y
    if dot0 < 0.0:
        region = SegmentRegion.BEFORE
    elif dot1 > 0.0:
        region = SegmentRegion.AFTER
    else:
        region = SegmentRegion.WITHIN

    seg_len = math.sqrt(seg_len_sq)
    signed = (p0x * py - p0y * px) / seg_len
    t = dot0 / seg_len_sq
    tc = min(1.0, max(0.0, t))
    foot = Point2(a.x + tc * px, a.y + tc * py)
    return SegmentProjection(region=region, foot=foot, signed_distance=signed, param_t=t)


def point_segment_distance(p: Point2, a: Point2, b: Point2) -> float:
    """Distance from p to the closest point of segment a-b."""
    return p.distance_to(project_point_onto_segment(p, a, b).foot)


def point_on_segment(p: Point2, a: Point2, b: Point2, tol: float = 1e-9) -> bool:
    """True when p lies on segment a-b within tol (endpoints included)."""
    if a.x == b.x and a.y == b.y:
        return p.distance_to(a) <= tol
    return point_segment_distance(p, a, b) <= tol


def _orientation(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the cross product (b-a) x (c-a): 1 ccw, -1 cw, 0 collinear."""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if cross > 0.0:
        return 1
    if cross < 0.0:
        return -1
    return 0


def segments_intersect(a1: Point2, a2: Point2, b1: Point2, b2: Point2) -> bool:
    """True when segments a1-a2 and b1-b2 share any point, endpoints included."""
    o1 = _orientation(a1, a2, b1)
    o2 = _orientation(a1, a2, b2)
    o3 = _orientation(b1, b2, a1)
    o4 = _orientation(b1, b2, a2)
    if o1 != o2 and o3 != o4:
        return True
    # Collinear overlap / endpoint touch cases.
    if o1 == 0 and _in_box(a1, a2, b1):
        return True
    if o2 == 0 and _in_box(a1, a2, b2):
        return True
    if o3 == 0 and _in_box(b1, b2, a1):
        return True
    if o4 == 0 and _in_box(b1, b2, a2):
        return True
    return False


def _in_box(a: Point2, b: Point2, p: Point2) -> bool:
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def point_in_polygon(p: Point2, poly: Sequence[Point2]) -> bool:
    """Ray-casting containment test; points on the boundary count as inside."""
    n = len(poly)
    if n < 3:
        raise GeometryError(f"polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        if point_on_segment(p, poly[i], poly[(i + 1) % n], tol=1e-12):
            return True
    inside = False
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        # Half-open rule: edge counts when it straddles the horizontal ray.
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
    return inside


def polygon_area(poly: Sequence[Point2]) -> float:
    """Signed shoelace area (positive for counter-clockwise winding)."""
    total = 0.0
    n = len(poly)
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return 0.5 * total


def polygon_is_simple(poly: Sequence[Point2]) -> bool:
    """True when no two non-adjacent edges intersect and no edge degenerates."""
    n = len(poly)
    if n < 3:
        return False
    edges = [(poly[i], poly[(i + 1) % n]) for i in range(n)]
    for a, b in edges:
        if a.x == b.x and a.y == b.y:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges legitimately share a vertex
            if segments_intersect(*edges[i], *edges[j]):
                return False
    return True


def polyline_length(points: Sequence[Point2]) -> float:
    """Sum of segment lengths along a polyline; 0 for a single point."""
    return sum(points[i].distance_to(points[i + 1]) for i in range(len(points) - 1))
