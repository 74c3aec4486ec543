"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific class that applies.
"""


class MoscError(Exception):
    """Base class for all package errors."""


class ValidationError(MoscError, ValueError):
    """Bad inputs: shapes, labels, thresholds, missing files, config errors."""


class NumericalError(MoscError, RuntimeError):
    """Degenerate numerics: zero SD, zero pre-RMSPE, singular designs."""
