"""Exception hierarchy shared across the package."""


class EntroconeError(Exception):
    """Base class for all errors raised by entrocone."""


class InvalidDistributionError(EntroconeError, ValueError):
    pass


class InvalidStateError(EntroconeError, ValueError):
    pass


class DimensionMismatchError(EntroconeError, ValueError):
    pass


class NotIsotropicError(EntroconeError, ValueError):
    """Raised for a submodule on which the symplectic form does not vanish.

    ``pair`` holds the indices of two generators with nonzero symplectic product.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class PhaseSearchError(EntroconeError, RuntimeError):
    pass


class UnsupportedDimensionError(EntroconeError, ValueError):
    pass


class ResourceLimitError(EntroconeError, RuntimeError):
    pass


class RefutationError(EntroconeError, ValueError):
    """A witness point violates the functional that was supposed to support it."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point
