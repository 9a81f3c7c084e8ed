"""Custom exceptions for the application."""


class SplineInversionError(Exception):
    """Base exception for transform inversion errors."""
    pass


class ValidationError(SplineInversionError, ValueError):
    """Raised when a spec, configuration or parameter fails validation."""
    pass


class DomainError(SplineInversionError, ValueError):
    """Raised when a function is evaluated outside its domain (e.g. the pole of Q)."""
    pass


class NumericalError(SplineInversionError):
    """Raised when a computation produces non-finite values."""
    pass


class CatalogError(SplineInversionError):
    """Raised when a catalog lookup fails."""
    pass


class ConfigurationError(SplineInversionError):
    """Raised when configuration is invalid."""
    pass


class ReportError(SplineInversionError):
    """Raised when a report cannot be written."""
    pass
