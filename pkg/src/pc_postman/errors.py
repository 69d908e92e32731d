"""Exception hierarchy shared by the library and the CLI."""


class PostmanError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PostmanError, ValueError):
    """Invalid graph input (bad vertex, color, weight, self-loop...)."""


class ParseError(GraphError):
    """Malformed instance or walk text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedError(PostmanError):
    """Operation is only defined for a different color count."""


class NotApplicableError(PostmanError, ValueError):
    """Precondition on graph size or shape not met."""


class InvariantError(PostmanError, RuntimeError):
    """An internal invariant was violated.

    These signal implementation bugs, never infeasibility of the instance.
    """


class OracleLimitError(PostmanError):
    """Instance too large for an exhaustive reference search."""
