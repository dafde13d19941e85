"""Exception hierarchy.

``ValidationError`` subclasses signal bad input (the CLI maps them to exit
code 3); ``CheckFailed`` subclasses signal that a verification procedure could
not certify something (exit code 1).
"""


class LSSError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LSSError, ValueError):
    """Input violates a documented precondition."""


class ParseError(ValidationError):
    """Malformed graph document. ``line`` is 1-based, or None for JSON input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleDetected(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class DimensionTooSmall(ValidationError):
    pass


class ElementOutsideGround(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class NotAdmissible(ValidationError):
    pass


class NotBinaryTree(ValidationError):
    pass


class DuplicateRow(ValidationError):
    pass


class UnsupportedFormat(ValidationError):
    pass


class ZeroRowPresent(ValidationError):
    pass


class SearchSpaceTooLarge(ValidationError):
    pass


class Exploded(ValidationError):
    """Generator count at some closure level exceeded the configured cap."""


class CheckFailed(LSSError):
    pass


class SamplingFailed(CheckFailed):
    pass


class WitnessNotFound(CheckFailed):
    pass
