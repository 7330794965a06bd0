"""Exception types shared across the package."""


class GalmineError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GalmineError):
    """Malformed input text (TAB/CXT/CSV/JSON-lines)."""


class ConstraintError(GalmineError):
    """A parameter or structural constraint was violated."""


class ResourceError(GalmineError):
    """A computation was refused because it would exceed a guard limit."""


class UnknownLabelError(GalmineError):
    """An object or attribute label does not exist in the context."""
