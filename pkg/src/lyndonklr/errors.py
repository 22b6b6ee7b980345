"""Shared exception types."""


class LyndonKLRError(Exception):
    """Base class for library errors."""


class ExactDivisionError(LyndonKLRError):
    """A division that must be exact left a remainder (carries the witness)."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotAPerfectSquareError(LyndonKLRError):
    """Square-root extraction failed; ``witness`` is the offending remainder."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceCapError(LyndonKLRError):
    """A computation would exceed the configured height cap."""


class RelationError(LyndonKLRError):
    """A module under construction violates the defining relations.

    ``report`` is the RelationReport with the failing witnesses.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
