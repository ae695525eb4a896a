"""Uniform time grid for the truncated space-time cylinder."""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

__all__ = ["TimeGrid"]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid 0 = t_0 < ... < t_M = t_final with M steps."""

    t_final: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ConfigurationError("stepping", "need at least one time step",
                                     "steps >= 1")
        if self.t_final <= 0:
            raise ConfigurationError("stepping", "final time must be positive",
                                     "t_final > 0")

    @property
    def dt(self):
        return self.t_final / self.steps

    @property
    def times(self):
        return np.linspace(0.0, self.t_final, self.steps + 1)
