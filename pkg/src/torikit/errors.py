"""Exception hierarchy shared across the package."""


class ToricError(Exception):
    """Base class for all errors raised by torikit."""


class DimensionError(ToricError, ValueError):
    """Operands live in lattices of different ranks."""


class PreconditionError(ToricError, ValueError):
    """A documented mathematical precondition of an operation failed."""


class NotAFanError(ToricError, ValueError):
    """A collection of cones violates the fan axioms."""


class FanDocumentError(ToricError, ValueError):
    """A fan document is malformed or fails validation."""


class IntegrityError(ToricError, RuntimeError):
    """An internal invariant was violated; indicates a bug or bad data."""


class NilpotencyCapError(IntegrityError):
    """Iterated differentiation did not reach zero within the cap."""
