"""Exception types raised across the package."""


class CcmatrixError(Exception):
    """Base class for all errors raised by this package."""


class FieldOverflow(CcmatrixError, ValueError):
    """A value does not fit in the requested bit-field width."""


class OutOfBounds(CcmatrixError, IndexError):
    """A bit offset or matrix index lies outside the valid range."""


class WidthOverflow(CcmatrixError, ValueError):
    """An element needs more bits than the matrix chunk width provides."""


class NarrowingRequested(CcmatrixError, ValueError):
    """A re-encode asked for a smaller chunk width than the current one."""


class CorruptStream(CcmatrixError, ValueError):
    """A length-prefixed stream decoded to an impossible state."""


class ShapeMismatch(CcmatrixError, ValueError):
    """Operand shapes are incompatible for the requested operation."""


class ArithmeticOverflow(CcmatrixError, OverflowError):
    """A result does not fit in an unsigned 64-bit integer."""


class ParseError(CcmatrixError, ValueError):
    """Text matrix input could not be parsed."""


class BadMagic(CcmatrixError, ValueError):
    """A container file has the wrong magic bytes or version."""


class TruncatedPayload(CcmatrixError, ValueError):
    """A container file ends before its declared payload does."""
