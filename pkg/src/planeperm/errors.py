"""Exception types shared across the package."""
from __future__ import annotations


class DomainError(ValueError):
    """Input is well formed but outside the domain of the requested operation."""


class ParseError(ValueError):
    """Malformed textual input.

    ``offset`` is the 0-based character position of the fault when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A configured enumeration or degree bound would be exceeded."""
