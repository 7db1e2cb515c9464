class LeafQuantError(Exception):
    """Base class for errors raised by leafquant."""


class AlphabetError(LeafQuantError, ValueError):
    pass


class RegexSyntaxError(LeafQuantError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class FormulaSyntaxError(LeafQuantError, ValueError):
    pass


class DimacsError(LeafQuantError, ValueError):
    pass


class SpecFormatError(LeafQuantError, ValueError):
    pass


class ArityError(LeafQuantError, ValueError):
    pass


class ResourceLimitError(LeafQuantError, RuntimeError):
    """A configurable size cap (states, monoid elements, search space) was hit."""


class NotCardinalError(LeafQuantError, ValueError):
    """The language has no bounded-significance description within the bounds.

    ``reason`` names the property that failed.
    """

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason
