"""Exception types raised by equiseq."""


class EquiseqError(Exception):
    """Base class for all library errors."""


class UnsupportedLength(EquiseqError, ValueError):
    """Structure or pattern length outside the supported range."""


class LengthMismatch(EquiseqError, ValueError):
    """Bit vectors of different lengths were combined."""


class RangeError(EquiseqError, IndexError):
    """A position or window lies outside a bit vector."""


class CapacityExceeded(EquiseqError, OverflowError):
    """Exact convolution cannot be guaranteed for the given operands."""


class ParityError(EquiseqError, RuntimeError):
    """A convolution coefficient had the wrong parity before halving.

    This indicates a bug, never bad input.
    """
