"""Exception hierarchy shared across the planner."""


class SeminavError(Exception):
    """Base class for all package errors."""


class MapParseError(SeminavError):
    """A map, grid, or scenario file could not be parsed."""


class MapValidationError(SeminavError):
    """A parsed map violates a structural invariant (named field in message)."""


class PlanningError(SeminavError):
    """Base class for planning failures."""


class NoRouteError(PlanningError):
    """No feasible path exists between the requested endpoints."""


class StartBlockedError(PlanningError):
    """The start point falls on a lethal cell."""


class GoalBlockedError(PlanningError):
    """The goal point falls on a lethal cell."""


class OffMapStartError(PlanningError):
    """The start point lies outside every mapped region."""


class OffMapGoalError(PlanningError):
    """The goal point lies outside every mapped region."""


class EmptyNetworkError(PlanningError):
    """An operation requiring lanes was called on an empty road network."""
