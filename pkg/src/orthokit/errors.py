"""Exception types raised by orthokit.

Every error is a ``ValueError`` so callers that only care about bad input can
catch that; the subclasses exist for the CLI, which maps them to exit codes
and names the violated condition.
"""

from __future__ import annotations


class OrthoError(ValueError):
    """Base class for all orthokit input errors."""


class InvalidEntry(OrthoError):
    """An entry outside {-1, 0, +1}, or a malformed shape."""


class LengthMismatch(OrthoError):
    pass


class NotSquare(OrthoError):
    pass


class OrderTooLarge(OrthoError):
    pass


class PrimalityViolation(OrthoError):
    pass


class RowCountMismatch(OrthoError):
    pass


class OrderMismatch(OrthoError):
    pass


class SizeMismatch(OrthoError):
    pass
