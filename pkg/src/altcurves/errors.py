"""Exception types shared across the package."""

from __future__ import annotations


class PdSyntaxError(ValueError):
    """Input text does not match the PD grammar."""


class PdStructureError(ValueError):
    """PD text parses but the arc labels are inconsistent."""


class PlanarityError(ValueError):
    """Rotation data does not describe a sphere diagram."""


class PreconditionError(ValueError):
    """An operation was called on data that fails its validation precondition."""


class EulerInconsistencyError(ValueError):
    """A polygon complex does not close up (odd corners, sphere mismatch)."""


class TractabilityError(ValueError):
    """A requested exhaustive run is outside the supported desk scale."""


class GuardAbort(RuntimeError):
    """Enumeration exceeded the visited-walk cap; partial results are unreliable.

    Attributes:
        visited: partial-walk count reached before the abort.
        cap: the configured cap.
    """

    def __init__(self, visited: int, cap: int):
        super().__init__(f"enumeration guard tripped: {visited} partial walks visited (cap {cap})")
        self.visited = visited
        self.cap = cap
