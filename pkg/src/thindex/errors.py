"""Exception types shared across the package."""


class ThindexError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(ThindexError):
    """A line of an edge-list file could not be parsed.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class InvalidIntervalError(ThindexError):
    """An interval restriction [a, b] with a > b was requested."""


class UnsupportedInputError(ThindexError):
    """The input graph violates a precondition of the chosen engine."""


class DegenerateRankingError(ThindexError):
    """A rank correlation was requested for an all-tied ranking."""


class TreeBudgetError(ThindexError):
    """A reachability tree exceeded its node budget during construction."""


class UndefinedScoreError(ThindexError):
    """A reachability score was requested for an empty node set."""
