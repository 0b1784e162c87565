"""Exception hierarchy. Everything raised on purpose derives from LatpathError."""


class LatpathError(Exception):
    pass


class DomainError(LatpathError):
    """Arguments outside an operation's domain (bad labels, ranges, preconditions)."""


class InputError(LatpathError):
    """Malformed external input (words, documents, CLI arguments)."""


class ResourceError(LatpathError):
    """Work refused because it exceeds the configured size cap."""


class MalformedPresentationError(LatpathError):
    """A set system that cannot serve in the requested presentation role."""


class InvalidRelaxationError(LatpathError):
    """Relaxation target is not a circuit-hyperplane."""


class InvalidPavingError(LatpathError):
    """Hyperplane list violates the paving conditions."""


class NoSpanningCircuitError(LatpathError):
    """No spanning circuit exists through the requested element."""
