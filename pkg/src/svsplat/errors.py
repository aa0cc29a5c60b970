"""Exception hierarchy shared by all svsplat modules.

Everything derives from SvsplatError so callers can catch the package as a
whole; the leaves additionally subclass the matching builtin (ValueError,
IndexError, ...) so generic handling keeps working.
"""


class SvsplatError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SvsplatError, ValueError):
    """An argument violates a documented precondition."""


class ShapeError(InvalidInputError):
    """Array shapes are inconsistent with each other or with the camera."""


class BoundsError(InvalidInputError, IndexError):
    """A pixel or point index is outside its valid range."""


class EmptyInputError(InvalidInputError):
    """An operation received an empty point set / zero valid pixels."""


class BehindCameraError(InvalidInputError):
    """A point projects at or behind the camera plane."""


class FormatError(SvsplatError, ValueError):
    """A file does not conform to its binary or textual format."""


class ConfigError(SvsplatError, ValueError):
    """A configuration field is unknown, malformed or out of range."""


class InternalConsistencyError(SvsplatError, RuntimeError):
    """A structural invariant that the library maintains was broken."""


class DivergenceError(SvsplatError, RuntimeError):
    """Optimization produced a non-finite loss."""
