"""Exception hierarchy shared by every module."""


class ChordCyclesError(Exception):
    """Base class for all library errors."""


class GraphParseError(ChordCyclesError, ValueError):
    """Edge-list input could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedHeaderError(GraphParseError):
    pass


class MalformedEdgeError(GraphParseError):
    pass


class EdgeCountMismatchError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class PreconditionError(ChordCyclesError, ValueError):
    """An operation was called outside its documented domain."""


class ChordedInputError(PreconditionError):
    """A non-chorded graph was required; ``witness`` holds a chorded cycle."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class BudgetExceededError(ChordCyclesError):
    """A search or enumeration ran past its configured budget or size cap."""


class NoPackingError(ChordCyclesError):
    """No packing of the requested size exists."""


class SoundnessError(ChordCyclesError, AssertionError):
    """A guarantee proved for the inputs failed to hold.

    Raised only when either the implementation has a bug or a caller
    violated a precondition that could not be checked cheaply. ``evidence``
    carries whatever counterexample was at hand.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence
