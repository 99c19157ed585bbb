"""Exception types shared across the package."""


class BhgError(Exception):
    """Base class for all package-specific errors."""


class GuardExceeded(BhgError):
    """A configured resource guard (memory, enumeration, scan window) was hit.

    Guards fail hard: results are never silently truncated or approximated.
    """


class ScanExceededConfiguredLimit(GuardExceeded):
    """A classic-greedy candidate scan ran past its configured ceiling."""


class ScanExceededBound(BhgError):
    """A strong-greedy scan found no admissible candidate at or below the
    proven ceiling floor(2g * n^(h+(h-1)/g)).

    The ceiling is a theorem, so hitting this means an implementation bug;
    generation aborts loudly instead of extending the scan.
    """


class InputFormatError(BhgError):
    """A sequence file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FitError(BhgError):
    """Growth-exponent fitting rejected its input."""
