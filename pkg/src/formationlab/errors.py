"""Exception types shared across the package.

Exit-code mapping used by the CLI: InputError -> 2, ResourceLimitError -> 3.
InvariantError signals an internal inconsistency (a bug, never expected input)
and is allowed to propagate.
"""

from __future__ import annotations


class InputError(Exception):
    """Malformed user input: bad cycle notation, bad group file, bad parameters.

    ``position`` is a character offset (cycle text) or a line number (group
    files) when one is known.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ResourceLimitError(Exception):
    """A configured resource bound was exceeded; the message names the bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (bound: {bound})")
        self.raw_message = message
        self.bound = bound


class InvariantError(Exception):
    """An internal invariant failed; indicates a bug in this package."""
