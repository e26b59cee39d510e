"""Shared exception types."""


class BierlabError(Exception):
    pass


class InvalidInput(BierlabError, ValueError):
    """Argument violates a documented precondition."""


class UndefinedDual(BierlabError, ValueError):
    """Alexander or c-duality requested for a full simplex / full multicomplex."""


class ResourceLimit(BierlabError, RuntimeError):
    """Input exceeds the documented size bound of an exhaustive routine."""
