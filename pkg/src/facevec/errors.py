"""Exception types shared across the package."""


class InputFormatError(ValueError):
    """A graph file or level specification does not follow its declared format."""


class GuardExceeded(RuntimeError):
    """An enumeration would produce more faces/cliques than the configured cap."""


class InvariantViolation(RuntimeError):
    """An always-true internal condition failed; this signals a bug, not bad input."""
