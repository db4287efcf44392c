"""Exception hierarchy shared by all shelfpack modules."""


class ShelfPackError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShelfPackError):
    """An argument is outside the mathematical domain of an operation."""


class PreconditionError(ShelfPackError):
    """A documented operation precondition does not hold."""


class BackendMismatchError(ShelfPackError):
    """Exact-rational and float values were mixed in one computation."""


class ParseError(ShelfPackError):
    """A file or literal does not conform to its format."""


class InconsistencyError(ShelfPackError):
    """An internal consistency check failed; indicates a bug, not bad input."""
