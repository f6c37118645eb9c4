"""Exceptions shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size bound."""


class TruncationError(ValueError):
    """A series coefficient beyond the truncation order was requested."""
