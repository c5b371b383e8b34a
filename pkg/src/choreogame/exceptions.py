"""Exception hierarchy.

The CLI maps these onto exit codes: document/validation problems exit 2,
analysis preconditions exit 3, enumeration caps exit 4.
"""


class ChoreogameError(Exception):
    """Base class for all errors raised by this package."""

    code = "Error"


class GameDocumentError(ChoreogameError):
    """A game document (or generator parameter set) failed validation."""

    code = "MalformedDocument"


class MalformedDocument(GameDocumentError):
    code = "MalformedDocument"


class DuplicateVertexId(GameDocumentError):
    code = "DuplicateVertexId"


class NegativeCost(GameDocumentError):
    code = "NegativeCost"


class CycleDetected(GameDocumentError):
    code = "CycleDetected"


class NoPathExists(GameDocumentError):
    code = "NoPathExists"


class InvalidParameters(GameDocumentError):
    code = "InvalidParameters"


class AnalysisError(ChoreogameError):
    """A requested analysis cannot run on this instance."""

    code = "AnalysisError"


class NoAffordablePath(AnalysisError):
    code = "NoAffordablePath"


class NoStableImputation(AnalysisError):
    code = "NoStableImputation"


class MissingAnnouncedPrices(AnalysisError):
    code = "MissingAnnouncedPrices"


class UnavoidableVertex(AnalysisError):
    code = "UnavoidableVertex"


class TooManyPlayers(ChoreogameError):
    """An enumeration-based operation was asked to exceed its player cap."""

    code = "TooManyPlayers"
