"""Pure-Python/numpy kernel implementations (fallback backend).

Semantics match kernels._native exactly; see that module for the reference
behavior. Fine for test-sized grids, slow on benchmark-scale maps.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

SQRT2 = math.sqrt(2.0)

# (dr, dc, unit step length) for the 8-connected neighborhood.
NEIGHBORS_8 = (
    (-1, 0, 1.0), (1, 0, 1.0), (0, -1, 1.0), (0, 1, 1.0),
    (-1, -1, SQRT2), (-1, 1, SQRT2), (1, -1, SQRT2), (1, 1, SQRT2),
)


def grid_shortest_path(cost_mult, cost_add, blocked, start_rc, goal_rc, resolution):
    """8-connected Dijkstra over a costmap.

    Entering cell v over a step of geometric length s costs
    s * cost_mult[v] + cost_add[v]; blocked cells are impassable. Ties in
    the priority queue break on flat cell index so equal-cost searches are
    deterministic. Returns (found, total_cost, path_rc, expansions) with
    path_rc an (N, 2) int32 array of (row, col) from start to goal.
    """
    mult = np.ascontiguousarray(cost_mult, dtype=np.float64)
    add = np.ascontiguousarray(cost_add, dtype=np.float64)
    blk = np.ascontiguousarray(blocked, dtype=np.uint8)
    rows, cols = mult.shape
    sr, sc = int(start_rc[0]), int(start_rc[1])
    gr, gc = int(goal_rc[0]), int(goal_rc[1])
    start = sr * cols + sc
    goal = gr * cols + gc

    dist = np.full(rows * cols, np.inf)
    parent = np.full(rows * cols, -1, dtype=np.int64)
    done = np.zeros(rows * cols, dtype=bool)
    dist[start] = 0.0
    heap = [(0.0, start)]
    expansions = 0
    found = False
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        expansions += 1
        if u == goal:
            found = True
            break
        ur, uc = divmod(u, cols)
        for dr, dc, step in NEIGHBORS_8:
            vr, vc = ur + dr, uc + dc
            if not (0 <= vr < rows and 0 <= vc < cols):
                continue
            v = vr * cols + vc
            if done[v] or blk[vr, vc]:
                continue
            nd = d + step * resolution * mult[vr, vc] + add[vr, vc]
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))

    if not found:
        return False, math.inf, np.empty((0, 2), dtype=np.int32), expansions
    cells = []
    u = goal
    while u != -1:
        cells.append(divmod(u, cols))
        u = parent[u]
    cells.reverse()
    return True, float(dist[goal]), np.asarray(cells, dtype=np.int32), expansions


def min_segment_distance_field(xs, ys, segments):
    """Distance from every (ys[i], xs[j]) point to the nearest segment.

    segments is an (n, 4) array of (x1, y1, x2, y2) rows; degenerate rows
    (zero length) are measured as point distances. Returns an (H, W) array;
    all-inf when there are no segments.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    segs = np.asarray(segments, dtype=np.float64).reshape(-1, 4)
    X, Y = np.meshgrid(xs, ys)
    # Squared-distance min then one sqrt, matching the native kernel bit-for-bit.
    best = np.full((ys.size, xs.size), np.inf)
    for x1, y1, x2, y2 in segs:
        px, py = x2 - x1, y2 - y1
        norm_sq = px * px + py * py
        if norm_sq == 0.0:
            dx, dy = X - x1, Y - y1
        else:
            t = ((X - x1) * px + (Y - y1) * py) / norm_sq
            np.clip(t, 0.0, 1.0, out=t)
            dx, dy = X - (x1 + t * px), Y - (y1 + t * py)
        np.minimum(best, dx * dx + dy * dy, out=best)
    return np.sqrt(best)
