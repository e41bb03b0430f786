"""Error hierarchy for Clifford algebra and hypercomplex function computations."""


class CliffordLabError(ValueError):
    """Base class for all cliffordlab errors."""


class DimensionMismatchError(CliffordLabError):
    """Operands live in Clifford algebras of different dimension."""


class ScalarKindMismatchError(CliffordLabError):
    """Exact and approximate operands were mixed."""


class DomainError(CliffordLabError):
    """An argument lies outside the domain of an operation."""


class DegreeCapError(CliffordLabError):
    """A polynomial exceeded the configured total-degree cap."""


class ConfigError(CliffordLabError):
    """A run configuration failed validation."""
