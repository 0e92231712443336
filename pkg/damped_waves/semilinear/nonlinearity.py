#######################################################################
# Project: Damped Waves Module
# File: nonlinearity.py
# Description: Power nonlinearities and stepper settings
# Author: AbigailWilliams1692
# Created: 2026-09-24
# Updated: 2026-10-10
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.model.exceptions import NonlinearOverflowError
from damped_waves.spectral import RealField


#######################################################################
# Nonlinearity
#######################################################################
class NonlinearityVariant(str, Enum):
    """f(u) = |u|^p or f(u) = |u|^{p-1} u."""

    ABS_POWER = "abs_power"
    SIGNED_POWER = "signed_power"


@dataclass(frozen=True)
class Nonlinearity:
    """
    Power nonlinearity with f(0) = 0 and |f(u) - f(v)| <= C |u - v|(|u|^{p-1} + |v|^{p-1}).
    """

    p: float
    variant: Union[NonlinearityVariant, str] = NonlinearityVariant.SIGNED_POWER

    def __post_init__(self) -> None:
        if not (self.p > 1 and math.isfinite(self.p)):
            raise ValueError(f"p must be a finite number > 1, got {self.p}")
        object.__setattr__(self, "variant", NonlinearityVariant(self.variant))

    def __call__(self, u: np.ndarray) -> np.ndarray:
        """
        Pointwise f(u).

        :param u: np.ndarray: Values.
        :return: np.ndarray: f(u); overflow raises NonlinearOverflowError.
        """
        try:
            with np.errstate(over="raise", invalid="raise"):
                magnitude = np.abs(u) ** self.p
                if self.variant is NonlinearityVariant.SIGNED_POWER:
                    magnitude = magnitude * np.sign(u)
        except FloatingPointError as exc:
            raise NonlinearOverflowError(f"f(u) overflowed for p={self.p}") from exc
        if not np.all(np.isfinite(magnitude)):
            raise NonlinearOverflowError(f"f(u) is not finite for p={self.p}")
        return magnitude

    def apply(self, u: RealField) -> RealField:
        return RealField(u.grid, self(u.values))

    def default_dealias(self) -> bool:
        """Two-thirds truncation for p <= 3, and always for |u|^p with non-integer p."""
        if self.p <= 3:
            return True
        return self.variant is NonlinearityVariant.ABS_POWER and not float(self.p).is_integer()


#######################################################################
# Stepper Configuration
#######################################################################
@dataclass(frozen=True)
class StepperConfig:
    """
    Settings of the exponential stepper.

    ``dealias = None`` defers to ``Nonlinearity.default_dealias``;
    ``blowup_threshold = None`` uses ``threshold_factor`` times the initial
    scale max(||u0||_inf, ||u1||_inf).
    """

    dt: float
    dealias: Optional[bool] = None
    blowup_threshold: Optional[float] = None
    max_steps: int = 1_000_000
    threshold_factor: float = 1e6

    def __post_init__(self) -> None:
        errors = []
        if not (self.dt > 0 and math.isfinite(self.dt)):
            errors.append(f"dt must be positive, got {self.dt}")
        if self.blowup_threshold is not None and not self.blowup_threshold > 0:
            errors.append(f"blowup_threshold must be positive, got {self.blowup_threshold}")
        if int(self.max_steps) != self.max_steps or self.max_steps < 1:
            errors.append(f"max_steps must be a positive integer, got {self.max_steps}")
        if not self.threshold_factor > 1:
            errors.append(f"threshold_factor must exceed 1, got {self.threshold_factor}")
        if errors:
            raise ValueError("; ".join(errors))

    def resolve_dealias(self, nonlinearity: Nonlinearity) -> bool:
        return nonlinearity.default_dealias() if self.dealias is None else bool(self.dealias)

    def resolve_threshold(self, initial_scale: float) -> float:
        if self.blowup_threshold is not None:
            return float(self.blowup_threshold)
        return self.threshold_factor * (initial_scale if initial_scale > 0 else 1.0)
