"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class BrushNumberError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(BrushNumberError, ValueError):
    """An argument violates an operation's preconditions."""


class TooLargeError(BrushNumberError):
    """The instance exceeds the configured cap of an exponential engine."""

    def __init__(self, message: str, *, size: int, cap: int) -> None:
        super().__init__(message)
        self.size = size
        self.cap = cap


class SearchIncomplete(BrushNumberError):
    """Branch and bound ran out of budget.

    ``incumbent`` holds the best result found so far. Its value is only an
    upper bound on the brush number.
    """

    def __init__(self, message: str, incumbent) -> None:
        super().__init__(message)
        self.incumbent = incumbent


class ParseError(BrushNumberError, ValueError):
    """Malformed graph text. ``line`` is 1-based, or None for whole-file errors."""

    code = "parse"

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class GraphValidationError(ParseError):
    """Well-formed text describing an invalid simple graph (loop or repeated edge)."""

    code = "validation"

    def __init__(self, message: str, edge: tuple[int, int], line: int | None = None) -> None:
        self.edge = edge
        super().__init__(message, line)


class MissingProblemLine(ParseError):
    code = "dimacs-missing-p"


class DuplicateProblemLine(ParseError):
    code = "dimacs-duplicate-p"


class VertexOutOfRange(ParseError):
    code = "dimacs-vertex-range"


class EdgeCountMismatch(ParseError):
    code = "dimacs-count-mismatch"
