"""Exception hierarchy shared across the toolkit."""


class SinodnError(Exception):
    """Base class for all toolkit errors."""


class ConfigurationError(SinodnError):
    """Invalid geometry, phantom, or algorithm configuration."""


class DataError(SinodnError):
    """Malformed or inconsistent input data (files, manifests, shapes)."""


class NumericalError(SinodnError):
    """A computation produced non-finite or degenerate values."""
