"""Exception types shared across the package."""


class PolycsError(Exception):
    """Base class for all package-specific errors."""


class GroupMismatchError(PolycsError, ValueError):
    """Two elements from different groups were combined."""


class WireFormatError(PolycsError, ValueError):
    """A serialized line or file deviates from the exact wire grammar."""


class PresentationError(PolycsError, ValueError):
    """A polycyclic presentation or matrix group descriptor is malformed."""


class CollectionBudgetError(PolycsError, RuntimeError):
    """Collection exceeded its rewriting-step budget.

    On a consistent presentation this only happens for adversarially long
    inputs; on a malformed one it is the usual symptom.
    """


class EnumerationError(PolycsError, ValueError):
    """Group enumeration was asked for an infinite or oversized group."""


class StateBudgetError(PolycsError, RuntimeError):
    """A breadth-first search exceeded its state budget."""


class RetryExhaustedError(PolycsError, RuntimeError):
    """Randomized key generation ran out of retries (degenerate platform)."""


class NotFoundError(PolycsError, RuntimeError):
    """A search-based decryption exhausted its solver budget."""
