"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed graph input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)


class IntegrityError(Exception):
    """An internal consistency check failed (corrupt encoding or non-clique id)."""
