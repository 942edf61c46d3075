"""Error types shared across the library.

ValidationError maps to CLI exit code 3, ResourceError to exit code 4.
"""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class ResourceError(RuntimeError):
    """A configured size or iteration cap was exceeded."""
