"""Exception types shared across the package."""


class SectornetError(Exception):
    """Base class for all errors raised by this package."""


class CoincidentPoints(SectornetError):
    """Two points with equal coordinates where distinct ones are required."""


class DuplicatePoint(SectornetError):
    """A point set contains two points closer than the duplicate tolerance."""


class DisconnectedInput(SectornetError):
    """The unit disk graph of the input is not connected."""


class TooFewPoints(SectornetError):
    """Fewer points than the operation supports."""


class TooManyPoints(SectornetError):
    """More points than the operation supports."""


class NotGeneralPosition(SectornetError):
    """Input is degenerate (collinear triples or duplicates)."""


class SearchExhausted(SectornetError):
    """Exhaustive orientation search found no feasible assignment.

    Signals an epsilon/degeneracy problem in the input, never a valid
    negative result; callers must surface it, not swallow it.
    """


class ConstructionInvariantViolated(SectornetError):
    """A constructed orientation failed its own verification check."""


class MissingOrientation(SectornetError):
    """An orientation assignment does not cover every point id."""


class ParseError(SectornetError):
    """A point or orientation file failed to parse.

    Carries the offending path and 1-based line number.
    """

    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line
        self.message = message
