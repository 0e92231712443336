#######################################################################
# Project: Damped Waves Module
# File: characteristic_roots.py
# Description: Roots of lambda^2 + mu r^{2 sigma} lambda + r^2 = 0 per frequency
# Author: AbigailWilliams1692
# Created: 2026-09-10
# Updated: 2026-10-06
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from enum import Enum

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.kernels.model_spec import ModelSpec

TOL_DEG = 1e-8
_TINY = np.finfo(float).tiny


#######################################################################
# Enums & Data Classes
#######################################################################
class RootRegime(Enum):
    """
    Root configuration of one Fourier mode.
    """
    ZERO = "zero"
    REAL = "real"
    COMPLEX = "complex"
    DEGENERATE = "degenerate"


# Integer codes used inside the vectorized arrays
REGIME_CODES = {
    RootRegime.ZERO: 0,
    RootRegime.REAL: 1,
    RootRegime.COMPLEX: 2,
    RootRegime.DEGENERATE: 3,
}
_REGIME_BY_CODE = {code: regime for regime, code in REGIME_CODES.items()}


@dataclass(frozen=True)
class RootsAtXi:
    """
    Characteristic roots at one frequency magnitude r.

    ``discriminant`` is the scaled radicand mu^2 - 4 r^{2(1-2 sigma)}; its sign
    decides between real and complex roots.
    """

    r: float
    lambda_plus: complex
    lambda_minus: complex
    discriminant: float
    regime: RootRegime


@dataclass(frozen=True)
class RootArrays:
    """
    Vectorized roots over an array of frequency magnitudes.

    ``damping`` is mu r^{2 sigma} and ``gap`` is |lambda_plus - lambda_minus|
    (set to 0 on degenerate and zero modes).
    """

    r: np.ndarray
    damping: np.ndarray
    gap: np.ndarray
    discriminant: np.ndarray
    lambda_plus: np.ndarray
    lambda_minus: np.ndarray
    regime: np.ndarray

    def mask(self, regime: RootRegime) -> np.ndarray:
        return self.regime == REGIME_CODES[regime]


#######################################################################
# Root Computation
#######################################################################
def root_arrays(model: ModelSpec, r: np.ndarray) -> RootArrays:
    """
    Characteristic roots for every entry of ``r``.

    Real roots are formed without cancellation: lambda_minus = -(a + gap)/2 and
    lambda_plus = r^2 / lambda_minus.

    :param model: ModelSpec: The equation parameters.
    :param r: np.ndarray: Nonnegative frequency magnitudes.
    :return: RootArrays: Roots, damping, gap and regime codes.
    """
    r = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(r)) or np.any(r < 0):
        raise ValueError("frequency magnitudes must be finite and nonnegative")
    sigma = model.sigma_float
    mu = float(model.mu)

    zero = r == 0.0
    r_safe = np.where(zero, 1.0, r)
    damping = np.where(zero, 0.0, mu * r_safe ** (2.0 * sigma))

    # Scaled discriminant in factored form
    s = r_safe ** (1.0 - 2.0 * sigma)
    discriminant = np.where(zero, mu**2, (mu - 2.0 * s) * (mu + 2.0 * s))
    gap = np.where(zero, 0.0, r_safe ** (2.0 * sigma) * np.sqrt(np.abs(discriminant)))

    real = discriminant >= 0.0
    magnitude_sum = np.where(real, damping, 2.0 * r)
    degenerate = (~zero) & (gap <= TOL_DEG * (magnitude_sum + _TINY))
    gap = np.where(degenerate, 0.0, gap)

    regime = np.full(r.shape, REGIME_CODES[RootRegime.COMPLEX], dtype=int)
    regime[real] = REGIME_CODES[RootRegime.REAL]
    regime[degenerate] = REGIME_CODES[RootRegime.DEGENERATE]
    regime[zero] = REGIME_CODES[RootRegime.ZERO]

    lambda_plus = np.zeros(r.shape, dtype=complex)
    lambda_minus = np.zeros(r.shape, dtype=complex)

    ## Real, well separated
    mask = regime == REGIME_CODES[RootRegime.REAL]
    lm = -(damping[mask] + gap[mask]) / 2.0
    lambda_minus[mask] = lm
    lambda_plus[mask] = r[mask] ** 2 / lm

    ## Double root
    mask = regime == REGIME_CODES[RootRegime.DEGENERATE]
    lambda_minus[mask] = -damping[mask] / 2.0
    lambda_plus[mask] = -damping[mask] / 2.0

    ## Complex-conjugate pair
    mask = regime == REGIME_CODES[RootRegime.COMPLEX]
    lambda_plus[mask] = -damping[mask] / 2.0 + 0.5j * gap[mask]
    lambda_minus[mask] = -damping[mask] / 2.0 - 0.5j * gap[mask]

    return RootArrays(
        r=r,
        damping=damping,
        gap=gap,
        discriminant=discriminant,
        lambda_plus=lambda_plus,
        lambda_minus=lambda_minus,
        regime=regime,
    )


def char_roots(model: ModelSpec, r: float) -> RootsAtXi:
    """
    Characteristic roots at one frequency magnitude.

    :param model: ModelSpec: The equation parameters.
    :param r: float: |xi| >= 0.
    :return: RootsAtXi: Roots and regime.
    """
    roots = root_arrays(model, np.array([r], dtype=float))
    return RootsAtXi(
        r=float(r),
        lambda_plus=complex(roots.lambda_plus[0]),
        lambda_minus=complex(roots.lambda_minus[0]),
        discriminant=float(roots.discriminant[0]),
        regime=_REGIME_BY_CODE[int(roots.regime[0])],
    )
