"""Exception hierarchy for fuzzy-metric.

Everything derives from ``ValueError`` so callers that only guard against bad
input keep working.
"""


class FuzzyMetricError(ValueError):
    """Base class for all errors raised by the library."""


class DomainError(FuzzyMetricError):
    """The requested quantity is mathematically undefined for the input."""


class UsageError(FuzzyMetricError):
    """Arguments are individually valid but cannot be combined."""


class PreconditionError(FuzzyMetricError):
    """A construction's standing hypothesis does not hold."""


class DocumentError(FuzzyMetricError):
    """A document failed to parse or violates the schema."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class PostconditionError(AssertionError):
    """A certified bound failed to hold after a construction."""
