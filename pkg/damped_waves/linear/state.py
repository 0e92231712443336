#######################################################################
# Project: Damped Waves Module
# File: state.py
# Description: Solution states on the grid and radial frequency profiles
# Author: AbigailWilliams1692
# Created: 2026-09-13
# Updated: 2026-10-10
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import math
from dataclasses import dataclass
from typing import Optional

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.model.exceptions import FieldShapeError
from damped_waves.spectral import GridSpec, RealField

GAUSSIAN_TAIL = 1e-12


#######################################################################
# State
#######################################################################
@dataclass(frozen=True)
class State:
    """
    (u, u_t) at one time, both on the same grid.
    """

    u: RealField
    ut: RealField
    time: float = 0.0

    def __post_init__(self) -> None:
        if self.u.grid != self.ut.grid:
            raise FieldShapeError("u and ut must share one grid.")
        if not self.time >= 0:
            raise ValueError("time must be nonnegative")

    @property
    def grid(self) -> GridSpec:
        return self.u.grid

    @classmethod
    def zeros(cls, grid: GridSpec, time: float = 0.0) -> "State":
        return cls(RealField.zeros(grid), RealField.zeros(grid), time)

    def __add__(self, other: "State") -> "State":
        return State(self.u + other.u, self.ut + other.ut, self.time)

    def __sub__(self, other: "State") -> "State":
        return State(self.u - other.u, self.ut - other.ut, self.time)

    def scaled(self, factor: float) -> "State":
        return State(self.u * factor, self.ut * factor, self.time)

    def max_norm(self) -> float:
        return self.u.max_norm()


#######################################################################
# Radial Profile
#######################################################################
@dataclass(frozen=True)
class RadialProfile:
    """
    Radial frequency function r -> g(r) on [0, r_max], zero beyond.

    ``kind`` is "gaussian" (analytic), "tabulated" (linear interpolation of
    samples) or "zero". ``tail_bound`` bounds |g| beyond r_max relative to |g(0)|.
    """

    kind: str
    r_max: float
    tail_bound: float = 0.0
    amplitude: float = 0.0
    width: float = 1.0
    radii: Optional[np.ndarray] = None
    samples: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        if self.kind not in ("gaussian", "tabulated", "zero"):
            raise ValueError(f"Unknown radial profile kind '{self.kind}'.")
        if not self.r_max > 0:
            raise ValueError("r_max must be positive")
        if self.kind == "tabulated":
            radii = np.asarray(self.radii, dtype=float)
            samples = np.asarray(self.samples, dtype=float)
            if radii.ndim != 1 or radii.shape != samples.shape or radii.size < 2:
                raise ValueError("tabulated profile needs matching 1-d radii and samples")
            if np.any(np.diff(radii) <= 0) or radii[0] < 0:
                raise ValueError("radii must be nonnegative and increasing")
            if not np.all(np.isfinite(samples)):
                raise ValueError("profile samples must be finite")

    #################################################
    # Presets
    #################################################
    @classmethod
    def gaussian(
        cls, n: int, amplitude: float, width: float, tail: float = GAUSSIAN_TAIL
    ) -> "RadialProfile":
        """
        Transform of amplitude * exp(-|x|^2 / (2 width^2)) in n dimensions,
        amplitude (2 pi)^{n/2} width^n exp(-width^2 r^2 / 2).
        """
        if not width > 0:
            raise ValueError("width must be positive")
        peak = amplitude * (2.0 * math.pi) ** (n / 2.0) * width**n
        r_max = math.sqrt(2.0 * math.log(1.0 / tail)) / width
        return cls(kind="gaussian", r_max=r_max, tail_bound=tail, amplitude=peak, width=width)

    @classmethod
    def tabulated(cls, radii: np.ndarray, samples: np.ndarray) -> "RadialProfile":
        radii = np.asarray(radii, dtype=float)
        return cls(kind="tabulated", r_max=float(radii[-1]), radii=radii, samples=np.asarray(samples, dtype=float))

    @classmethod
    def zero(cls) -> "RadialProfile":
        return cls(kind="zero", r_max=1.0)

    #################################################
    # Evaluation
    #################################################
    def is_zero(self) -> bool:
        if self.kind == "zero":
            return True
        if self.kind == "gaussian":
            return self.amplitude == 0.0
        return bool(np.all(self.samples == 0.0))

    def evaluate(self, r: np.ndarray) -> np.ndarray:
        """g(r), zero beyond r_max."""
        r = np.asarray(r, dtype=float)
        if self.kind == "zero":
            return np.zeros(r.shape)
        if self.kind == "gaussian":
            values = self.amplitude * np.exp(-0.5 * (self.width * r) ** 2)
        else:
            values = np.interp(r, self.radii, self.samples, right=0.0)
        return np.where(r <= self.r_max, values, 0.0)
