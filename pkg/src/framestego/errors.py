"""Exception hierarchy shared by every module."""


class StegoError(ValueError):
    """Base class for all errors raised by framestego."""


class ConfigError(StegoError):
    """Invalid frame geometry or parameter values."""


class DimensionError(StegoError):
    """Vector or matrix length does not match the frame geometry."""


class CapacityError(StegoError):
    """Not enough null-space dimensions to carry the requested code."""


class FormatError(StegoError):
    """Malformed or truncated file content."""
