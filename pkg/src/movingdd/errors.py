"""Exception hierarchy with structured diagnostics.

Every error names the module it originates from and the violated
precondition, so batch drivers can log failures without parsing
free-form text.
"""

__all__ = [
    "MovingDDError",
    "ConfigurationError",
    "InputError",
    "GeometryDegeneracyError",
    "TransmissionViolationError",
    "NumericalFailureError",
    "MisuseError",
    "UnsupportedConfigurationError",
]


class MovingDDError(Exception):
    """Base class; carries the originating module and the failed precondition."""

    def __init__(self, module, message, precondition=None):
        self.module = module
        self.precondition = precondition
        text = f"[{module}] {message}"
        if precondition is not None:
            text += f" (violated precondition: {precondition})"
        super().__init__(text)


class ConfigurationError(MovingDDError):
    """Invalid configuration value or unknown catalog entry."""


class InputError(MovingDDError):
    """Caller passed data violating a documented input contract."""


class GeometryDegeneracyError(MovingDDError):
    """Jacobian determinant fell below the positivity floor."""


class TransmissionViolationError(MovingDDError):
    """Subdomain traces disagree on the interface beyond tolerance."""

    def __init__(self, module, message, worst_level=None, worst_node=None,
                 mismatch=None):
        self.worst_level = worst_level
        self.worst_node = worst_node
        self.mismatch = mismatch
        if worst_level is not None:
            message += (f"; worst mismatch {mismatch:.3e} at time level "
                        f"{worst_level}, interface node {worst_node}")
        super().__init__(module, message, "interface traces agree")


class NumericalFailureError(MovingDDError):
    """Linear solver breakdown (non-SPD system or unstable factorization)."""

    def __init__(self, module, message, step=None):
        self.step = step
        if step is not None:
            message += f" (time step {step})"
        super().__init__(module, message, "per-step system is SPD")


class MisuseError(MovingDDError):
    """Operation applied to data that does not satisfy its contract."""


class UnsupportedConfigurationError(MovingDDError):
    """Requested combination is outside the supported catalog."""
