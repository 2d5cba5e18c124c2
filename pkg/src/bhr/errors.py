"""Exception types shared across the package."""


class BhrError(Exception):
    """Base class for all package errors."""


class InvalidEdgeError(BhrError, ValueError):
    """Loop edge or vertex outside {0, ..., v-1}."""


class OrderMismatchError(BhrError, ValueError):
    """Path order and list order disagree."""


class ParseError(BhrError, ValueError):
    """Malformed list, path, or catalog text."""


class InvalidDivisorError(BhrError, ValueError):
    """Divisor argument does not divide the order."""


class CompositionError(BhrError, ValueError):
    """Left operand of a composition is not perfect."""


class InvalidTargetError(BhrError, ValueError):
    """Requested ones-count is below the current one."""


class InvalidLengthError(BhrError, ValueError):
    """Length too large for the requested interpretation."""


class TemplateDefectError(BhrError, ValueError):
    """A family template expanded to an invalid path (suspected source typo)."""


class CapExceededError(BhrError, ValueError):
    """Requested exhaustive work exceeds the configured cap."""
