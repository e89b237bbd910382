"""Exception types shared across the package."""


class StressliftError(Exception):
    """Base class for all library errors."""


class ValidationError(StressliftError):
    """A combinatorial or geometric validity check failed."""


class DegenerateFace(ValidationError):
    pass


class RepeatedVertexInFace(ValidationError):
    pass


class EdgeOverused(ValidationError):
    pass


class DisconnectedSkeleton(ValidationError):
    pass


class DisconnectedDual(ValidationError):
    pass


class NonSurfaceVertexStar(ValidationError):
    """A vertex whose star is not a single fan or a single closed umbrella."""


class ZeroLengthEdge(ValidationError):
    """An edge whose two endpoints share the same planar position."""


class DuplicateId(ValidationError):
    pass


class UnknownVertexRef(ValidationError):
    pass


class UnknownFace(StressliftError):
    pass


class UnknownVertex(StressliftError):
    pass


class UnknownEdgeKey(StressliftError):
    """A stress weight keyed by a vertex pair that is not a framework edge."""


class NotAdjacent(StressliftError):
    """A claimed crossing edge is not shared by the two faces."""


class PreconditionViolated(StressliftError):
    pass


class BoundaryVertex(StressliftError):
    """An operation that needs a closed face loop met an open vertex star."""


class NotMonodromyFree(StressliftError):
    """Some face-loop lift of the supplied stress is nonzero."""


class NotSelfStress(StressliftError):
    pass


class FoldMismatch(StressliftError):
    """Adjacent face heights do not fold along the shared edge line."""


class StressRecoveryError(StressliftError):
    """Heights do not determine a unique self-stress completion."""


class MissingFaceHeight(StressliftError):
    pass


class ParameterTooSmall(StressliftError):
    pass


class ParseError(StressliftError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
