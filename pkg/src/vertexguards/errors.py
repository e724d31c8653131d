"""Exception hierarchy.

Validation problems derive from :class:`PolygonError` (a ``ValueError``).
Failures that can only come from a bug or a broken geometric assumption
derive from :class:`InvariantError` and carry the state that produced them.
"""


class DegenerateSegmentError(ValueError):
    """A segment was given with identical endpoints."""


class PolygonError(ValueError):
    """Base class for rejected polygon input."""

    def __init__(self, message, ring=None, vertex=None):
        super().__init__(message)
        self.ring = ring
        self.vertex = vertex


class TooFewVerticesError(PolygonError):
    pass


class DuplicatePointError(PolygonError):
    pass


class CollinearVerticesError(PolygonError):
    pass


class SelfIntersectingRingError(PolygonError):
    pass


class RingsIntersectError(PolygonError):
    pass


class HoleOutsideOuterError(PolygonError):
    pass


class InstanceSyntaxError(ValueError):
    """Malformed instance or guard file. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class InvariantError(RuntimeError):
    """An internal guarantee did not hold. ``state`` holds whatever is needed
    to reproduce the failure."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class NoSpecialTriangleFoundError(InvariantError):
    pass


class TriangulationFailedError(InvariantError):
    pass


class DualNotTreeError(InvariantError):
    pass


class NotSpecialError(ValueError):
    pass


class ApexOnBaseHoleError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


class GenerationFailedError(RuntimeError):
    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed
