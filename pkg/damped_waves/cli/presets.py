#######################################################################
# Project: Damped Waves Module
# File: presets.py
# Description: Initial-data presets for experiment runs
# Author: AbigailWilliams1692
# Created: 2026-09-29
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import dataclasses
import math
from dataclasses import dataclass
from typing import Optional, Tuple

# Third-party Packages
import numpy as np
import scipy.fft

# Local Packages
from damped_waves.linear import RadialProfile, State
from damped_waves.model.exceptions import DataPresetError
from damped_waves.spectral import GridSpec, RealField

PRESET_KINDS = ("gaussian", "bump", "band_limited_random")
PRESET_TARGETS = ("u0", "u1")
BOUNDARY_TAIL = 1e-10


#######################################################################
# Data Preset
#######################################################################
@dataclass(frozen=True)
class DataPreset:
    """
    One initial-data profile placed in u0 or u1; the other component is zero.

    - gaussian: amplitude * exp(-|x - c|^2 / (2 width^2))
    - bump: amplitude * exp(1 - 1/(1 - rho^2)) for rho = |x - c| / radius < 1, else 0
    - band_limited_random: seeded random field on the modes |k_j| <= max_mode,
      scaled to max-norm amplitude
    """

    kind: str = "gaussian"
    target: str = "u1"
    amplitude: float = 1.0
    width: float = 1.0
    radius: float = 2.0
    center: Optional[Tuple[float, ...]] = None
    max_mode: int = 4
    seed: int = 0

    def __post_init__(self) -> None:
        errors = []
        if self.kind not in PRESET_KINDS:
            errors.append(f"data.kind must be one of {', '.join(PRESET_KINDS)}, got '{self.kind}'")
        if self.target not in PRESET_TARGETS:
            errors.append(f"data.target must be u0 or u1, got '{self.target}'")
        if not math.isfinite(self.amplitude):
            errors.append("data.amplitude must be finite")
        if not self.width > 0:
            errors.append(f"data.width must be positive, got {self.width}")
        if not self.radius > 0:
            errors.append(f"data.radius must be positive, got {self.radius}")
        if int(self.max_mode) != self.max_mode or self.max_mode < 1:
            errors.append(f"data.max_mode must be a positive integer, got {self.max_mode}")
        if int(self.seed) != self.seed or self.seed < 0:
            errors.append(f"data.seed must be a nonnegative integer, got {self.seed}")
        if errors:
            raise DataPresetError("; ".join(errors))

    #################################################
    # Geometry
    #################################################
    def center_for(self, n: int) -> Tuple[float, ...]:
        if self.center is None:
            return (0.0,) * n
        if len(self.center) != n:
            raise DataPresetError(f"data.center has {len(self.center)} coordinates, expected {n}")
        return tuple(float(c) for c in self.center)

    def support_radius(self, n: int) -> float:
        """Radius of a ball around the origin containing the data (up to the tail bound)."""
        offset = math.sqrt(sum(c**2 for c in self.center_for(n)))
        if self.kind == "bump":
            return offset + self.radius
        return offset + self.width * math.sqrt(2.0 * math.log(1.0 / BOUNDARY_TAIL))

    def boundary_warning(self, grid: GridSpec) -> Optional[str]:
        """Message when a Gaussian is still above the tail bound at the box boundary."""
        if self.kind != "gaussian" or self.amplitude == 0:
            return None
        center = self.center_for(grid.n)
        gap = grid.box_length / 2.0 - max(abs(c) for c in center)
        tail = math.exp(-(gap**2) / (2.0 * self.width**2)) if gap > 0 else 1.0
        if tail > BOUNDARY_TAIL:
            return (
                f"gaussian data reaches {tail:.2e} of its peak at the box boundary "
                f"(limit {BOUNDARY_TAIL:g}); widen the box or narrow the data"
            )
        return None

    #################################################
    # Builders
    #################################################
    def _profile(self, grid: GridSpec) -> np.ndarray:
        center = self.center_for(grid.n)
        shifted = [x - c for x, c in zip(grid.coordinates, center)]
        rho2 = sum(x**2 for x in shifted)
        if self.kind == "gaussian":
            return self.amplitude * np.exp(-rho2 / (2.0 * self.width**2))
        if self.kind == "bump":
            if self.radius + max(abs(c) for c in center) >= grid.box_length / 2.0:
                raise DataPresetError("bump support must lie strictly inside the box")
            s = rho2 / self.radius**2
            values = np.zeros(grid.shape)
            inside = s < 1.0
            values[inside] = self.amplitude * np.exp(1.0 - 1.0 / (1.0 - s[inside]))
            return values
        return self._random_field(grid)

    def _random_field(self, grid: GridSpec) -> np.ndarray:
        rng = np.random.default_rng(int(self.seed))
        coefficients = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
        index_axes = np.meshgrid(*([np.abs(grid.axis_indices)] * grid.n), indexing="ij")
        band = np.logical_and.reduce([k <= self.max_mode for k in index_axes]) & ~grid.nyquist_mask
        field = scipy.fft.ifftn(np.where(band, coefficients, 0.0)).real
        peak = float(np.max(np.abs(field)))
        return self.amplitude * field / peak if peak > 0 else field

    def build(self, grid: GridSpec) -> State:
        """
        Initial State on the grid.

        :param grid: GridSpec: The lattice.
        :return: State: (u0, u1) at time 0.
        """
        values = RealField(grid, self._profile(grid))
        zero = RealField.zeros(grid)
        return State(values, zero) if self.target == "u0" else State(zero, values)

    def radial_profiles(self, n: int, r_max: Optional[float] = None) -> Tuple[RadialProfile, RadialProfile]:
        """
        (v0hat, v1hat) for the radial oracle; only centered Gaussians are radial
        with a closed-form transform.

        :param n: Space dimension.
        :param r_max: Cutoff radius overriding the tail-bound choice.
        :return: Pair of RadialProfile.
        """
        if self.kind != "gaussian" or any(c != 0 for c in self.center_for(n)):
            raise DataPresetError("oracle mode needs a centered gaussian preset")
        profile = RadialProfile.gaussian(n, self.amplitude, self.width)
        if r_max is not None:
            profile = dataclasses.replace(profile, r_max=float(r_max))
        zero = RadialProfile.zero()
        return (profile, zero) if self.target == "u0" else (zero, profile)
