"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class BingspaceError(ValueError):
    pass


class DimensionError(BingspaceError):
    """Operands live on different carriers, groups or dimensions."""


class NotInvertibleError(BingspaceError):
    pass


class CapacityError(BingspaceError):
    """Requested enumeration exceeds a hard size cap."""


class ValidationError(BingspaceError):
    """Input data violates a structural invariant (with an optional witness)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DistributivityError(BingspaceError):
    pass
