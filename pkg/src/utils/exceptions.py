"""
exceptions.py: error types raised by the factor-order engine.

Every class also derives from ValueError, so callers may catch either.
"""


class FactorOrderError(ValueError):
    """Root of all errors raised by this package."""


class WordFormatError(FactorOrderError):
    """A word or pattern could not be parsed, or holds a non-positive entry."""


class PreconditionError(FactorOrderError):
    """An operation was called outside its domain."""


class TruncationMismatchError(FactorOrderError):
    """Two series with different truncation horizons were combined."""


class OutOfCapError(FactorOrderError):
    """A coefficient was read beyond the truncation caps, where it is unknown."""


class UniformityError(FactorOrderError):
    """The cancelled cluster-column multiset is not constant on a subset-size class."""


class RecoveryError(FactorOrderError):
    """The coefficient provider does not describe the minimal clusters of any word."""


class UsageError(FactorOrderError):
    """The command line is invalid."""
