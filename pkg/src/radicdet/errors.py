"""Exception types shared across the package.

The CLI maps these onto process exit codes, so user-facing failures
need to be distinguishable from plain ValueError (programmer misuse).
"""


class RankRangeError(ValueError):
    """A rank is outside [0, C(n, m)) for the requested (n, m)."""


class CapacityError(RuntimeError):
    """The number of terms exceeds a configured cap.

    Raised instead of silently starting an enumeration whose size was
    probably not intended (the term count grows as C(n, m)).
    """


class MatrixParseError(ValueError):
    """Malformed matrix text. ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
