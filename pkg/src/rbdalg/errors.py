"""Exception types shared across the package."""


class DiagramError(Exception):
    """Base class for every error raised by rbdalg."""


class MissingComponentError(DiagramError, KeyError):
    """A component of a diagram has no assigned state."""

    def __str__(self):
        return Exception.__str__(self)


class NotBuiltUponError(DiagramError, ValueError):
    """A diagram uses a component outside the generating set."""


class CapExceededError(DiagramError):
    """A configured size limit (state count, node count) was exceeded."""


class StoreMismatchError(DiagramError, ValueError):
    """Canonical forms from different node stores were combined."""


class MissingProbabilityError(DiagramError, KeyError):
    """A component of a diagram has no reliability assigned."""

    def __str__(self):
        return Exception.__str__(self)


class OutOfRangeError(DiagramError, ValueError):
    """An integer argument is outside its admissible range."""
