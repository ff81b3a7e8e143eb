"""Package-wide error types."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured size cap."""
