"""Exception types shared across the package.

Notation errors carry the offending source position so the CLI can point
at the character that broke parsing.
"""

from __future__ import annotations


class NotationError(ValueError):
    """Base class for tokenizer/parser failures."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownCharacter(NotationError):
    pass


class UnexpectedToken(NotationError):
    pass


class UnbalancedParenthesis(NotationError):
    pass


class EmptySlot(NotationError):
    pass


class TooManySlots(NotationError):
    pass


class UnsupportedPolyhedron(NotationError):
    pass


class DiagramError(ValueError):
    """Base class for failures while building or transforming diagrams."""


class UnknownNode(DiagramError):
    pass


class HasPrecrossings(DiagramError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"diagram still has {count} precrossing(s)")


class TooManyPrecrossings(DiagramError):
    def __init__(self, count: int, bound: int):
        self.count = count
        self.bound = bound
        super().__init__(
            f"{count} precrossings exceed the resolution cap of {bound}; "
            "raise the cap to enumerate anyway"
        )


class EnumerationTooLarge(ValueError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"solution space of size {size} exceeds the enumeration cap {cap}")


class NoPseudotwistAtLocation(ValueError):
    pass
