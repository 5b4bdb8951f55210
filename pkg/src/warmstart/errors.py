"""Shared exception types."""


class DimensionMismatch(ValueError):
    """Two points with different dimensions were combined."""


class CapExceeded(ValueError):
    """An exact enumeration was requested beyond its feasibility cap."""


class InvariantViolation(RuntimeError):
    """An internal simulator invariant failed; indicates a bug, not bad input."""
