class RealwaError(Exception):
    """Base class for everything this package raises on bad input."""


class ShapeError(RealwaError, ValueError):
    pass


class AlphabetError(RealwaError, ValueError):
    pass


class ValidationError(RealwaError, ValueError):
    """An automaton failed its construction-time invariants."""


class ConversionError(RealwaError, ValueError):
    pass


class LinearityError(RealwaError):
    """Raised when a linear automaton was required but the input is not one.

    The full linearity report is kept on ``.report``.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class PreconditionError(RealwaError):
    pass


class DocumentError(RealwaError, ValueError):
    """A file failed to parse or validate; ``where`` names the line or field path."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where
        self.detail = message
