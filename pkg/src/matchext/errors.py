"""Exception types shared across the package."""


class GraphConstructionError(ValueError):
    """An edge list breaks the simple-graph rules (self-loop, duplicate,
    out-of-range id) or a derived-graph precondition fails."""


class FormatError(ValueError):
    """Malformed graph text. ``offset`` is the character position in the
    offending line when it is known."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class ParameterError(ValueError):
    """A parameter triple or defect value is invalid for the given graph."""


class SearchCapExceeded(RuntimeError):
    """The graph is larger than the configured exhaustive-search cap."""
