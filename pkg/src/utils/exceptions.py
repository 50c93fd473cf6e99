"""
Exception hierarchy for visorlab.

The concrete classes also derive from the matching built-in so callers catching
``ValueError`` or ``RuntimeError`` keep working.
"""


class VisorError(Exception):
    """Base class for errors raised deliberately by visorlab."""


class DomainError(VisorError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class DegenerateRibError(DomainError):
    """A zero-length rib (|s| = 1) where a positive radius is required."""


class ArgumentError(VisorError, ValueError):
    """Malformed arguments: sample counts, empty inputs, invalid card specs."""


class ConvergenceError(VisorError, RuntimeError):
    """A numeric solve failed to bracket or converge."""


class EnvelopeUndefinedError(VisorError, RuntimeError):
    """Every sample of a family was singular; the family has no envelope."""


class ConfigError(VisorError, ValueError):
    """The run configuration could not be read or is invalid."""
