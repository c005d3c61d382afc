# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: 8-connected grid Dijkstra and segment distance fields.

Reference semantics for the kernel API — kernels.pure mirrors this module
bit-for-bit (same settle order, same tie-breaking on flat cell index).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, sqrt

cnp.import_array()


cdef inline bint _less(double* dist, long a, long b) noexcept nogil:
    if dist[a] < dist[b]:
        return True
    if dist[a] > dist[b]:
        return False
    return a < b


cdef void _sift_up(long* heap, long* pos, double* dist, long i) noexcept nogil:
    cdef long node = heap[i]
    cdef long parent
    while i > 0:
        parent = (i - 1) >> 1
        if _less(dist, node, heap[parent]):
            heap[i] = heap[parent]
            pos[heap[i]] = i
            i = parent
        else:
            break
    heap[i] = node
    pos[node] = i


cdef void _sift_down(long* heap, long* pos, double* dist, long size, long i) noexcept nogil:
    cdef long node = heap[i]
    cdef long child
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        if child + 1 < size and _less(dist, heap[child + 1], heap[child]):
            child += 1
        if _less(dist, heap[child], node):
            heap[i] = heap[child]
            pos[heap[i]] = i
            i = child
        else:
            break
    heap[i] = node
    pos[node] = i


def grid_shortest_path(cost_mult, cost_add, blocked, start_rc, goal_rc, double resolution):
    """8-connected Dijkstra; see kernels package docstring for the contract."""
    cdef double[:, ::1] mult = np.ascontiguousarray(cost_mult, dtype=np.float64)
    cdef double[:, ::1] add = np.ascontiguousarray(cost_add, dtype=np.float64)
    cdef unsigned char[:, ::1] blk = np.ascontiguousarray(blocked, dtype=np.uint8)
    cdef long rows = mult.shape[0]
    cdef long cols = mult.shape[1]
    cdef long n = rows * cols
    cdef long start = <long>start_rc[0] * cols + <long>start_rc[1]
    cdef long goal = <long>goal_rc[0] * cols + <long>goal_rc[1]

    dist_arr = np.full(n, np.inf, dtype=np.float64)
    parent_arr = np.full(n, -1, dtype=np.int64)
    pos_arr = np.full(n, -1, dtype=np.int64)
    heap_arr = np.empty(n, dtype=np.int64)
    settled_arr = np.zeros(n, dtype=np.uint8)
    cdef double[::1] dist = dist_arr
    cdef long[::1] parent = parent_arr
    cdef long[::1] pos = pos_arr
    cdef long[::1] heap = heap_arr
    cdef unsigned char[::1] settled = settled_arr

    cdef double* dist_p = &dist[0]
    cdef long* pos_p = &pos[0]
    cdef long* heap_p = &heap[0]

    cdef long[8] dr = [-1, 1, 0, 0, -1, -1, 1, 1]
    cdef long[8] dc = [0, 0, -1, 1, -1, 1, -1, 1]
    cdef double SQRT2 = sqrt(2.0)
    cdef double[8] step = [1.0, 1.0, 1.0, 1.0, SQRT2, SQRT2, SQRT2, SQRT2]

    cdef long heap_size = 1
    cdef long expansions = 0
    cdef bint found = False
    cdef long u, v, ur, uc, vr, vc, k
    cdef double d, nd

    dist[start] = 0.0
    heap[0] = start
    pos[start] = 0

    with nogil:
        while heap_size > 0:
            u = heap_p[0]
            heap_size -= 1
            heap_p[0] = heap_p[heap_size]
            pos_p[heap_p[0]] = 0
            pos_p[u] = -1
            if heap_size > 1:
                _sift_down(heap_p, pos_p, dist_p, heap_size, 0)
            settled[u] = 1
            expansions += 1
            if u == goal:
                found = True
                break
            d = dist_p[u]
            ur = u / cols
            uc = u - ur * cols
            for k in range(8):
                vr = ur + dr[k]
                vc = uc + dc[k]
                if vr < 0 or vr >= rows or vc < 0 or vc >= cols:
                    continue
                v = vr * cols + vc
                if settled[v] or blk[vr, vc]:
                    continue
                nd = d + step[k] * resolution * mult[vr, vc] + add[vr, vc]
                if nd < dist_p[v]:
                    dist_p[v] = nd
                    parent[v] = u
                    if pos_p[v] == -1:
                        heap_p[heap_size] = v
                        pos_p[v] = heap_size
                        heap_size += 1
                        _sift_up(heap_p, pos_p, dist_p, pos_p[v])
                    else:
                        _sift_up(heap_p, pos_p, dist_p, pos_p[v])

    if not found:
        return False, INFINITY, np.empty((0, 2), dtype=np.int32), int(expansions)

    cdef long count = 0
    u = goal
    while u != -1:
        count += 1
        u = parent[u]
    path_arr = np.empty((count, 2), dtype=np.int32)
    cdef int[:, ::1] path = path_arr
    u = goal
    cdef long i = count - 1
    while u != -1:
        path[i, 0] = <int>(u / cols)
        path[i, 1] = <int>(u - (u / cols) * cols)
        u = parent[u]
        i -= 1
    return True, float(dist[goal]), path_arr, int(expansions)


def min_segment_distance_field(xs, ys, segments):
    """Min distance from each (ys[i], xs[j]) point to any segment; (H, W) array."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    segs_arr = np.ascontiguousarray(np.asarray(segments, dtype=np.float64).reshape(-1, 4))
    cdef double[:, ::1] segs = segs_arr
    cdef long W = xv.shape[0]
    cdef long H = yv.shape[0]
    cdef long nseg = segs.shape[0]
    out_arr = np.full((H, W), np.inf, dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    if nseg == 0:
        return out_arr

    px_arr = np.empty(nseg, dtype=np.float64)
    py_arr = np.empty(nseg, dtype=np.float64)
    nn_arr = np.empty(nseg, dtype=np.float64)
    cdef double[::1] px = px_arr
    cdef double[::1] py = py_arr
    cdef double[::1] norm_sq = nn_arr
    cdef long k
    for k in range(nseg):
        px[k] = segs[k, 2] - segs[k, 0]
        py[k] = segs[k, 3] - segs[k, 1]
        norm_sq[k] = px[k] * px[k] + py[k] * py[k]

    cdef long i, j
    cdef double x, y, t, fx, fy, dx, dy, dsq, best
    with nogil:
        for i in range(H):
            y = yv[i]
            for j in range(W):
                x = xv[j]
                best = INFINITY
                for k in range(nseg):
                    if norm_sq[k] == 0.0:
                        fx = segs[k, 0]
                        fy = segs[k, 1]
                    else:
                        t = ((x - segs[k, 0]) * px[k] + (y - segs[k, 1]) * py[k]) / norm_sq[k]
                        if t < 0.0:
                            t = 0.0
                        elif t > 1.0:
                            t = 1.0
                        fx = segs[k, 0] + t * px[k]
                        fy = segs[k, 1] + t * py[k]
                    dx = x - fx
                    dy = y - fy
                    dsq = dx * dx + dy * dy
                    if dsq < best:
                        best = dsq
                out[i, j] = sqrt(best)
    return out_arr
