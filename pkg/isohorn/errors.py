"""Exception hierarchy for IsoHorn."""


class IsoHornError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidIndexError(IsoHornError, ValueError):
    """A subset, partition, weight or Weyl element failed validation."""


class PreconditionError(IsoHornError, ValueError):
    """An operation was called outside the hypotheses it is defined under.

    Raised instead of returning a false verdict so callers can tell
    "not applicable" apart from "false".
    """


class RankCapError(IsoHornError):
    """A desk-scale size cap (rank, cell dimension, weight size) was exceeded."""


class InconsistencyError(IsoHornError):
    """Two computations that must agree did not.

    Attributes:
        details: Plain data describing the offending instance
    """

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details
