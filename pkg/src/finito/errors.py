"""Exception and warning types shared across the package."""


class FinitoError(Exception):
    """Base class for errors raised by this package."""


class EmptyError(FinitoError):
    """The empty space is rejected everywhere."""


class CycleError(FinitoError):
    """A cover relation contains a directed cycle."""


class ParseError(FinitoError):
    """Malformed poset text; carries the 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateCoverError(UserWarning):
    """A cover pair was declared twice; duplicates are dropped."""


class NotConnectedError(FinitoError):
    """Operation requires a connected space."""


class LastPointError(FinitoError):
    """Removing the last point would leave the empty space."""


class NotContinuousError(FinitoError):
    """A map between finite spaces is not order preserving."""

    def __init__(self, x, y, fx, fy):
        super().__init__(
            f"not order preserving: {x} <= {y} but image pair ({fx}, {fy}) is unrelated"
        )
        self.pair = (x, y)


class IllFormedMoveError(FinitoError):
    """A loop rewriting move does not satisfy its side conditions."""


class IllFormedPathError(FinitoError):
    """An edge sequence is not a valid path in the cover digraph."""


class QuotientError(FinitoError):
    """A quotient of a finite space failed to be T0."""


class CapExceededError(FinitoError):
    """Requested enumeration size exceeds the configured cap."""


class FlattenBlockedError(FinitoError):
    """Height-two flattening is blocked by a non-extremal basepoint."""
