"""Global path planning over unidirectional road networks for robots in
semi-structured environments (garages, campuses).

Plans balance path length against consistency with the road network:
endpoints may cut across the road onto reverse lanes, and intersection
interiors are crossed over a two-layer potential costmap.
"""

from .baselines import Baseline, BaselineKind, plan_baseline
from .errors import (
    EmptyNetworkError,
    GoalBlockedError,
    MapParseError,
    MapValidationError,
    NoRouteError,
    OffMapGoalError,
    OffMapStartError,
    PlanningError,
    SeminavError,
    StartBlockedError,
)
from .geometry import Point2, Pose2, SegmentProjection, SegmentRegion, angle_diff
from .mapio import load_map, load_occupancy, load_scenarios, write_metrics_json, write_path_csv
from .mapping import CandidateSet, MatchCandidate, SpliceKind, map_goal_point, map_start_point
from .metrics import MetricsReport, direction_deviation, distance_deviation, path_length, timed_plan
from .netsearch import SearchBudget, SearchOutcome, dijkstra_network, plan_case1
from .planner import (
    PointClass,
    Region,
    RegionKind,
    SemanticMap,
    classify_point,
    find_intersected_points,
    plan,
    plan_case2,
    resample_path,
)
from .potential import (
    CellState,
    OccupancyGrid,
    PotentialGrid,
    PotentialParams,
    build_semantic_layer,
    build_static_layer,
    combine_layers,
    grid_dijkstra,
)
from .result import PlanCase, PlanResult
from .roadnet import Lane, LinkParams, RoadNetwork, build_network, find_reverse_lanes, link_lanes, network_from_lanes

__version__ = "0.1.0"
