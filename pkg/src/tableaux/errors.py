"""Exception types shared across the package."""


class TableauxError(ValueError):
    """Base class for input and domain errors raised by this package."""


class InvalidWordError(TableauxError):
    """A sequence is not a valid permutation word."""


class InvalidTableauError(TableauxError):
    """Columns do not form a valid Young tableau, or the shape is out of scope."""


class LimitError(TableauxError):
    """An enumeration or poset request exceeds the configured size limit."""
