"""Exception types raised across the package."""


class CogSciKError(Exception):
    """Base class for all package errors."""


class DomainError(CogSciKError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidWeightError(DomainError):
    pass


class ClusterSizeError(DomainError):
    pass


class CatalogParseError(CogSciKError, ValueError):
    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class InstantiationError(CogSciKError, RuntimeError):
    pass


class ExhaustionError(CogSciKError, RuntimeError):
    """Too few eligible moves remain to fill an actor's cluster."""

    def __init__(self, tick, actor, eligible, k):
        self.tick = tick
        self.actor = actor
        self.eligible = eligible
        self.k = k
        super().__init__(
            f"tick {tick}, actor {actor!r}: {eligible} eligible moves, cluster needs {k}"
        )
