"""Error types raised by corequot."""

from typing import Optional


class CoreQuotError(Exception):
    """Base class for all corequot errors."""


class ValidationError(CoreQuotError, ValueError):
    """Malformed input value (partition parts, polynomial text, operator names)."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class PreconditionError(CoreQuotError, ValueError):
    """An operation was called outside its domain."""


class ConfigError(CoreQuotError):
    """Invalid configuration file or environment."""
