"""Exception types shared across the package."""


class SylvesterError(Exception):
    """Base class for errors raised by this package."""


class InvalidPrefix(SylvesterError):
    """A word prefix is not a prefix of any reduced word."""


class MalformedTableau(SylvesterError):
    """A tableau does not satisfy the staircase standard-tableau invariants."""


class DegenerateConfiguration(SylvesterError):
    """A point configuration violates general position."""


class ResourceLimit(SylvesterError):
    """Predicted work for an exact run exceeds the configured budget."""


class CheckpointMismatch(SylvesterError):
    """A checkpoint file does not match the requested run parameters."""


class RetriesExhausted(SylvesterError):
    """Rejection sampling failed to produce a point after the retry cap."""
