from typing import Any, Dict, Optional


class EdgeIdealError(ValueError):
    """Base class for every error raised by the toolkit."""


class MalformedGraphError(EdgeIdealError):
    pass


class LoopEdgeError(EdgeIdealError):
    pass


class DuplicateEdgeError(EdgeIdealError):
    pass


class WeightError(EdgeIdealError):
    pass


class VertexRangeError(EdgeIdealError):
    pass


class NotIndependentError(EdgeIdealError):
    pass


class NotAFaceError(EdgeIdealError):
    pass


class FieldError(EdgeIdealError):
    pass


class DimensionMismatchError(EdgeIdealError):
    pass


class NotStrongCoverError(EdgeIdealError):
    pass


class ImproperIdealError(EdgeIdealError):
    """Raised when an operation needs a proper (or nonzero) ideal."""


class VoidComplexError(EdgeIdealError):
    pass


class CapExceededError(EdgeIdealError):
    pass


class InvalidParameterError(EdgeIdealError):
    pass


class DisagreementError(EdgeIdealError):
    """
    A structural verdict and a brute-force oracle disagree.

    The bundle holds everything needed to replay the instance (graph, ideals,
    Betti table) and is written to disk by the CLI.
    """

    def __init__(self, message: str, bundle: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.bundle = bundle or {}
