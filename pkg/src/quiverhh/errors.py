"""Exception types shared across the package."""


class QuiverHHError(Exception):
    """Base class for all errors raised by this package."""


class QuotientUndefined(QuiverHHError):
    """Quotient representatives requested for spaces without containment."""


class NotAdmissible(QuiverHHError):
    """The relation set does not present an admissible ideal."""


class NotFiniteDimensional(QuiverHHError):
    """No finiteness certificate below the configured length cap."""


class InvalidArrow(QuiverHHError):
    """A path references an arrow label that was never declared."""


class NotAcyclic(QuiverHHError):
    """Operation requires a quiver without directed cycles."""


class DeltaUndefined(QuiverHHError):
    """The arrow pair does not span a Kronecker component of the separated quiver."""


class UnsupportedCharacteristic(QuiverHHError):
    """Operation refuses to run in characteristic 2."""


class TooLarge(QuiverHHError):
    """Brute-force oracle problem exceeds its size guard."""


class NotAssociative(QuiverHHError):
    """Multiplication table fails an associativity check."""


class ParseError(QuiverHHError):
    """Presentation text could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", col {column}" if column is not None else "") + f": {message}"
        super().__init__(message)
