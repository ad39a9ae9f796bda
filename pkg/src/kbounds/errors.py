"""Exception types shared across the package."""


class KboundsError(Exception):
    """Base class for package-specific errors."""


class GraphFormatError(KboundsError, ValueError):
    """Malformed graph input (graph6 or edge-list)."""


class CatalogError(KboundsError):
    """Catalog directory is missing files or contains unparsable entries."""


class CapabilityError(KboundsError):
    """Request exceeds a hard capability limit (dimension, binary count)."""


class InapplicableError(KboundsError):
    """Bound does not apply to this graph (walk-regularity required)."""


class UndefinedBoundError(KboundsError):
    """Bound is undefined for this spectrum (e.g. a sign class is empty)."""


class BudgetExceededError(KboundsError):
    """Oracle budget (vertex count or time) was exceeded."""

    def __init__(self, note: str):
        super().__init__(note)
        self.note = note
