"""Exception types shared across the library."""


class VidealError(Exception):
    """Base class for every error raised by this library."""


class RingMismatchError(VidealError):
    """Operands live over different rings."""


class ImproperIdealError(VidealError):
    """An operation required a proper nonzero ideal."""


class NoWitnessError(VidealError):
    """No monomial witnesses the requested colon equality (prime not associated)."""


class InternalError(VidealError):
    """An internal consistency check failed; this indicates a bug, not bad input."""


class ParseError(VidealError):
    """Session text could not be parsed or validated."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
