"""Comparison planners sharing the grid-search engine.

FreeDijkstra ignores the road network entirely (static lethality only);
DijkstraInSS adds a per-step penalty proportional to the distance between
the entered cell and the nearest lane, pulling paths toward the network
without constraining their direction of travel.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geometry import Point2
from .planner import SemanticMap, resample_path
from .potential import run_grid_search
from .result import PlanCase, PlanResult, make_result


class Baseline(Enum):
    FREE_DIJKSTRA = "dijkstra"
    DIJKSTRA_IN_SS = "dijkstra-ss"


@dataclass(frozen=True)
class BaselineKind:
    kind: Baseline
    k_d: float = 10.0  # cost per meter of road-network deviation (DijkstraInSS)

    def __post_init__(self):
        if self.k_d < 0:
            raise ValueError("k_d must be >= 0")


def plan_baseline(kind: BaselineKind, p_s: Point2, p_g: Point2, smap: SemanticMap) -> PlanResult:
    """Grid Dijkstra on the static layer, resampled like the main planner."""
    t0 = time.perf_counter()
    static = smap.static_layer
    mult = np.ones(static.shape, dtype=np.float64)
    if kind.kind is Baseline.DIJKSTRA_IN_SS and kind.k_d > 0:
        add = kind.k_d * smap.lane_distances
    else:
        add = np.zeros(static.shape, dtype=np.float64)
    outcome = run_grid_search(static, p_s, p_g, mult, add)
    result = make_result(outcome.path, PlanCase.FREE_GRID)
    result.path = resample_path(result.points(), smap.resample_spacing)
    result.length = sum(
        a.position.distance_to(b.position) for a, b in zip(result.path, result.path[1:])
    )
    result.planning_time = time.perf_counter() - t0
    return result
