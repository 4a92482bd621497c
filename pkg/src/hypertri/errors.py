"""Exception types shared across the package.

Plain ``ValueError`` is used for ordinary contract violations (bad ranges,
mismatched uniformities, malformed certificates).  The classes below exist
because the CLI maps them to distinct exit codes.
"""


class CapacityError(ValueError):
    """A structural size limit was exceeded (bit-mask width, search scale)."""


class HgParseError(ValueError):
    """Malformed ``.hg`` text.  Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
