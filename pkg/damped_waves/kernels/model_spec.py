#######################################################################
# Project: Damped Waves Module
# File: model_spec.py
# Description: Parameters (n, sigma, mu) of the structurally damped equation
# Author: AbigailWilliams1692
# Created: 2026-09-10
# Updated: 2026-09-29
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.model.exceptions import ModelSpecError

Real = Union[int, float, Fraction]


#######################################################################
# Model Specification
#######################################################################
@dataclass(frozen=True)
class ModelSpec:
    """
    u_tt - Laplace(u) + mu (-Laplace)^sigma u_t = f(u) in n space dimensions.

    ``sigma`` keeps the value it was given (a Fraction stays exact for the
    exponent calculators); numerical code reads ``sigma_float``.
    """

    n: int
    sigma: Real
    mu: float

    def __post_init__(self) -> None:
        errors = []
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            errors.append(f"n must be a positive integer, got {self.n!r}")
        if not 0 < self.sigma <= 1:
            errors.append(f"sigma must lie in (0,1], got {self.sigma}")
        if not self.mu > 0 or not np.isfinite(float(self.mu)):
            errors.append(f"mu must be positive, got {self.mu}")
        if errors:
            raise ModelSpecError("; ".join(errors))

    @property
    def sigma_float(self) -> float:
        return float(self.sigma)

    def damping_symbol(self, r: np.ndarray) -> np.ndarray:
        """mu |xi|^{2 sigma}, the coefficient of w' in each Fourier mode."""
        return self.mu * np.asarray(r, dtype=float) ** (2.0 * self.sigma_float)

    def transition_radius(self) -> float:
        """
        Radius where the characteristic roots change from real to complex,
        (mu/2)^{1/(1-2 sigma)}; infinite at sigma = 1/2 where no transition occurs.
        """
        if self.sigma == Fraction(1, 2):
            return float("inf")
        return (self.mu / 2.0) ** (1.0 / (1.0 - 2.0 * self.sigma_float))
