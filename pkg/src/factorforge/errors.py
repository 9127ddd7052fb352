"""Exception types shared across the package."""


class FactorForgeError(Exception):
    """Base class for all package-specific errors."""


class InvalidPartitionError(FactorForgeError):
    """Partition does not cover the vertex set exactly once, or refers to a
    vertex outside the graph."""


class InfeasibleDemandError(FactorForgeError):
    """A vertex demands more incident edges than the graph provides."""


class NotAlternatingError(FactorForgeError):
    """A colored graph fed to the circuit decomposer is not a disjoint union
    of color-balanced components."""


class InvalidSwitchError(FactorForgeError):
    """A switch set violates its contract (red edges outside the factor,
    blue edges inside it, or unbalanced colors)."""


class RepairContractError(FactorForgeError):
    """Inputs to the factor repair step violate its precondition."""


class SizeGuardError(FactorForgeError):
    """An exhaustive enumeration was asked to run above its size guard."""


class FormatError(FactorForgeError):
    """Malformed instance or factor file."""
