"""Hot-loop kernels: 8-connected grid Dijkstra and segment distance fields.

A compiled Cython extension is preferred; a numpy/heapq implementation with
identical semantics is selected when the extension is missing or when
SEMINAV_PURE_KERNELS=1 is set. Both backends expose:

    grid_shortest_path(cost_mult, cost_add, blocked, start_rc, goal_rc, resolution)
        -> (found, total_cost, path_rc, expansions)
    min_segment_distance_field(xs, ys, segments) -> (H, W) float64 array
"""

import os

from . import pure as _pure

_FORCE_PURE = os.environ.get("SEMINAV_PURE_KERNELS", "").strip() in {"1", "true", "yes"}

if not _FORCE_PURE:
    try:
        from . import _native as _impl
        _BACKEND = "native"
    except ImportError:
        _impl = _pure
        _BACKEND = "pure"
else:
    _impl = _pure
    _BACKEND = "pure"

grid_shortest_path = _impl.grid_shortest_path
min_segment_distance_field = _impl.min_segment_distance_field


def backend_name() -> str:
    """Active kernel backend: 'native' or 'pure'."""
    return _BACKEND


def backends() -> dict:
    """All importable backends keyed by name (for parity tests and benchmarks)."""
    found = {"pure": _pure}
    try:
        from . import _native
        found["native"] = _native
    except ImportError:
        pass
    return found
