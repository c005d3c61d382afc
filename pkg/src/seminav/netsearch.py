"""Dijkstra over the road network with candidate splicing and the
branch-and-bound candidate-pair loop for passage/parking planning.

Lane-interior match candidates are spliced in as virtual nodes on a view of
the network (the base graph is never mutated). The pair loop keeps the
shortest connector+path total and, after every improvement, caps later
searches at twice the node expansions the improving search needed.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from enum import Enum

from .errors import NoRouteError
from .geometry import Point2
from .mapping import ConnectorFilter, MatchCandidate, SpliceKind, map_goal_point, map_start_point
from .result import PlanCase, PlanResult, dedupe_consecutive, make_result
from .roadnet import RoadNetwork


@dataclass(frozen=True)
class SearchBudget:
    """Node-expansion cap for one Dijkstra run."""

    max_cost: int

    def __post_init__(self):
        if self.max_cost < 1:
            raise ValueError("max_cost must be >= 1")


@dataclass
class SearchOutcome:
    success: bool
    path: list[Point2]
    path_length: float
    search_cost: int
    cost: float = 0.0  # equals path_length on the network; differs on costmaps

    def __post_init__(self):
        if self.success and self.cost == 0.0:
            self.cost = self.path_length


class Side(Enum):
    START = "start"
    GOAL = "goal"


class SplicedNetwork:
    """Read-only overlay over a RoadNetwork with virtual lane-interior nodes.

    Splicing an interior candidate at parameter t splits that lane's
    directed edge into a chain through the virtual node, preserving total
    length. Multiple splices on one lane order themselves along the chain.
    """

    def __init__(self, net: RoadNetwork):
        self._net = net
        self._points: list[Point2] = []            # virtual node positions
        self._splices: dict[int, list[tuple[float, int]]] = {}  # lane idx -> [(t, node)]
        self._override: dict[int, list[tuple[int, float]]] = {}

    @property
    def num_nodes(self) -> int:
        return self._net.num_nodes + len(self._points)

    def node_point(self, node_id: int) -> Point2:
        base = self._net.num_nodes
        if node_id < base:
            return self._net.node_point(node_id)
        return self._points[node_id - base]

    def neighbors(self, node_id: int):
        if node_id in self._override:
            return self._override[node_id]
        if node_id >= self._net.num_nodes:
            return ()
        return self._net.neighbors(node_id)

    def splice(self, cand: MatchCandidate) -> int:
        """Attach a candidate; returns the node id to search from/to."""
        start_id, end_id = self._net.lane_node_ids(cand.lane_id)
        if cand.splice is SpliceKind.AT_START_NODE:
            return start_id
        if cand.splice is SpliceKind.AT_END_NODE:
            return end_id
        lane = self._net.lane(cand.lane_id)
        if cand.point.distance_to(lane.start) + cand.point.distance_to(lane.end) > lane.length + 1e-6:
            raise ValueError(f"candidate not on lane {cand.lane_id}")
        node_id = self._net.num_nodes + len(self._points)
        self._points.append(cand.point)
        k = self._net.lane_index(cand.lane_id)
        entries = self._splices.setdefault(k, [])
        entries.append((cand.param_t, node_id))
        entries.sort()
        self._rebuild_chain(k, start_id, end_id, lane.length)
        return node_id

    def _rebuild_chain(self, lane_idx: int, start_id: int, end_id: int, length: float):
        chain = [(0.0, start_id)] + self._splices[lane_idx] + [(1.0, end_id)]
        for (t0, a), (t1, b) in zip(chain, chain[1:]):
            weight = (t1 - t0) * length
            if a == start_id:
                # Start node keeps its non-intra edges; the direct lane edge
                # is replaced by the first chain hop.
                kept = [(dst, w) for dst, w in self._net.neighbors(start_id) if dst != end_id]
                self._override[start_id] = kept + [(b, weight)]
            else:
                self._override[a] = [(b, weight)]


def splice_candidate(net: RoadNetwork, cand: MatchCandidate, side: Side) -> tuple[SplicedNetwork, int]:
    """One-shot helper: fresh view with a single candidate attached."""
    view = SplicedNetwork(net)
    node_id = view.splice(cand)
    return view, node_id


def dijkstra_network(net, src: int, dst: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Shortest directed path by total edge weight; ties break on node id.

    ``net`` is any object with num_nodes / neighbors / node_point. The
    search fails (success=False) when the frontier empties or when settling
    one more non-goal node would exceed the budget.
    """
    max_cost = budget.max_cost if budget is not None else None
    dist = {src: 0.0}
    parent: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, src)]
    settled = 0
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        settled += 1
        if u == dst:
            path_ids = [u]
            while path_ids[-1] != src:
                path_ids.append(parent[path_ids[-1]])
            path_ids.reverse()
            return SearchOutcome(
                success=True,
                path=[net.node_point(i) for i in path_ids],
                path_length=d,
                search_cost=settled,
            )
        if max_cost is not None and settled >= max_cost:
            return SearchOutcome(False, [], 0.0, settled)
        for v, w in net.neighbors(u):
            if v in done:
                continue
            nd = d + w
            if nd < dist.get(v, float("inf")):
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
    return SearchOutcome(False, [], 0.0, settled)


def _pair_order(cands) -> list[MatchCandidate]:
    return sorted(cands, key=lambda c: (c.connector_length, c.lane_id, c.splice.value, c.param_t))


def search_candidate_pairs(
    net: RoadNetwork,
    start_cands,
    goal_cands,
    use_budget: bool = True,
) -> tuple[MatchCandidate, MatchCandidate, SearchOutcome, float] | None:
    """Loop all (start, goal) candidate pairs, keep the minimal connector-
    inclusive total, tightening the expansion budget after improvements.

    Returns (start_cand, goal_cand, outcome, total_length) or None when
    every pair fails.
    """
    max_cost = 2 * net.num_nodes if use_budget else None
    min_length = float("inf")
    best = None
    for sc in _pair_order(start_cands):
        for gc in _pair_order(goal_cands):
            view = SplicedNetwork(net)
            src = view.splice(sc)
            dst = view.splice(gc)
            budget = SearchBudget(max_cost) if max_cost is not None else None
            outcome = dijkstra_network(view, src, dst, budget)
            if not outcome.success:
                continue  # budget-pruned searches are treated as non-improving
            total = outcome.path_length + sc.connector_length + gc.connector_length
            if total < min_length:
                min_length = total
                best = (sc, gc, outcome, total)
                if use_budget:
                    max_cost = 2 * outcome.search_cost
    return best


def plan_case1(
    p_s: Point2,
    p_g: Point2,
    net: RoadNetwork,
    use_budget: bool = True,
    include_reverse: bool = True,
    connector_ok: ConnectorFilter = None,
) -> PlanResult:
    """Passage/parking planning: map both endpoints (shortcuts included),
    search every candidate pair, return query-to-query path and length."""
    t0 = time.perf_counter()
    start_cands = map_start_point(p_s, net, include_reverse, connector_ok)
    goal_cands = map_goal_point(p_g, net, include_reverse, connector_ok)
    best = search_candidate_pairs(net, start_cands, goal_cands, use_budget)
    if best is None:
        raise NoRouteError(
            f"no network route between ({p_s.x}, {p_s.y}) and ({p_g.x}, {p_g.y})"
        )
    _, _, outcome, _ = best
    points = dedupe_consecutive([p_s, *outcome.path, p_g])
    result = make_result(points, PlanCase.PASSAGE_TO_PASSAGE)
    result.planning_time = time.perf_counter() - t0
    return result
