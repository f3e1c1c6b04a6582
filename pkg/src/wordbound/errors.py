"""Exception types shared across the package."""


class DomainError(ValueError):
    """An element does not belong to the group it was used with."""


class UnsupportedFamilyError(ValueError):
    """The operation is not available for this group family."""


class EmptyGenSetError(ValueError):
    """Symmetrization produced no letters (all inputs were the identity)."""


class NotGeneratingError(ValueError):
    """A generating set required by an experiment fails to generate."""


class ResourceLimitExceeded(RuntimeError):
    """A search ran out of its memory budget.

    Carries the largest radius that was fully completed before the budget
    was hit, so callers can report a partial result.
    """

    def __init__(self, message, partial_radius=None, explored=0):
        super().__init__(message)
        self.partial_radius = partial_radius
        self.explored = explored
