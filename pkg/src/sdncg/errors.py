"""Exception types shared across the package."""


class SdncgError(Exception):
    """Base class for all library errors."""


class StructureError(SdncgError):
    """A graph, state, or move violates a structural requirement."""


class ParameterError(SdncgError):
    """Infeasible or malformed construction / game parameters."""


class GraphParseError(SdncgError):
    """A graph file or payload could not be parsed."""


class BudgetExceededError(SdncgError):
    """An exact enumeration would exceed its declared budget."""


class NoEquilibriumError(SdncgError):
    """No pairwise stable state was found where one was required."""


class CertificateError(SdncgError):
    """A certified inequality failed to hold."""
