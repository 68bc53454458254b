class CaviblochError(Exception):
    """Base class for package errors."""


class ConfigError(CaviblochError):
    """Invalid run configuration or physical parameters."""


class NumericalError(CaviblochError):
    """A solver failed to converge or produced an unusable result."""


class TruncationError(NumericalError):
    """A basis or grid truncation is too aggressive for the request."""
