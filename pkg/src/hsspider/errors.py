"""Exceptions shared across modules."""


class ResourceLimitError(RuntimeError):
    """A configured size guard (crossings, states, vertices) was exceeded."""
