#######################################################################
# Project: Damped Waves Module
# File: grid.py
# Description: Periodic-box grid specification and frequency lattice
# Author: AbigailWilliams1692
# Created: 2026-09-08
# Updated: 2026-10-09
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

# Third-party Packages
import numpy as np
import scipy.fft

# Local Packages
from damped_waves.model.exceptions import GridSpecError

MAX_DIMENSION = 3
MIN_POINTS = 8


#######################################################################
# Grid Specification
#######################################################################
@dataclass(frozen=True)
class GridSpec:
    """
    Uniform periodic grid on the box [-L/2, L/2)^n.

    Convention: angular frequencies xi_k = 2*pi*k/L with k in the FFT order of
    ``scipy.fft.fftfreq`` (the single Nyquist index is -N/2). The lattice holds
    exactly one zero mode, stored at index (0, ..., 0).
    """

    n: int
    points_per_axis: int
    box_length: float

    def __post_init__(self) -> None:
        errors = []
        if not isinstance(self.n, (int, np.integer)) or not 1 <= self.n <= MAX_DIMENSION:
            errors.append(f"n must be 1, 2 or 3, got {self.n!r}")
        if (
            not isinstance(self.points_per_axis, (int, np.integer))
            or self.points_per_axis < MIN_POINTS
            or self.points_per_axis % 2
        ):
            errors.append(
                f"points_per_axis must be an even integer >= {MIN_POINTS}, "
                f"got {self.points_per_axis!r}"
            )
        if not self.box_length > 0 or not np.isfinite(self.box_length):
            errors.append(f"box_length must be positive, got {self.box_length!r}")
        if errors:
            raise GridSpecError("; ".join(errors))

    #################################################
    # Geometry
    #################################################
    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.points_per_axis,) * self.n

    @property
    def spacing(self) -> float:
        return self.box_length / self.points_per_axis

    @property
    def cell_volume(self) -> float:
        """Grid measure Delta V = (L/N)^n."""
        return self.spacing**self.n

    @property
    def volume(self) -> float:
        return float(self.box_length**self.n)

    @cached_property
    def axis_coordinates(self) -> np.ndarray:
        return -self.box_length / 2.0 + self.spacing * np.arange(self.points_per_axis)

    @cached_property
    def coordinates(self) -> Tuple[np.ndarray, ...]:
        """Meshgrid of physical coordinates, one array per axis."""
        return tuple(np.meshgrid(*([self.axis_coordinates] * self.n), indexing="ij"))

    @cached_property
    def radius(self) -> np.ndarray:
        """|x| at every grid point."""
        return np.sqrt(sum(x**2 for x in self.coordinates))

    #################################################
    # Frequency Lattice
    #################################################
    @cached_property
    def axis_indices(self) -> np.ndarray:
        """Integer lattice indices k along one axis, FFT order."""
        return np.rint(
            scipy.fft.fftfreq(self.points_per_axis, d=1.0 / self.points_per_axis)
        ).astype(int)

    @cached_property
    def axis_wavenumbers(self) -> np.ndarray:
        return 2.0 * np.pi * self.axis_indices / self.box_length

    @cached_property
    def wavenumbers(self) -> Tuple[np.ndarray, ...]:
        """Meshgrid of xi_j, one array per axis."""
        return tuple(np.meshgrid(*([self.axis_wavenumbers] * self.n), indexing="ij"))

    @cached_property
    def wavenumber_squared(self) -> np.ndarray:
        return sum(xi**2 for xi in self.wavenumbers)

    @cached_property
    def wavenumber_magnitude(self) -> np.ndarray:
        """|xi| on the lattice."""
        return np.sqrt(self.wavenumber_squared)

    @property
    def frequency_cell(self) -> float:
        """Lattice measure (2*pi/L)^n divided by (2*pi)^n, i.e. 1/L^n."""
        return 1.0 / self.volume

    @cached_property
    def nyquist_mask(self) -> np.ndarray:
        """True on lattice points whose index touches the unpaired Nyquist plane."""
        nyquist = -self.points_per_axis // 2
        axes = np.meshgrid(*([self.axis_indices] * self.n), indexing="ij")
        return np.logical_or.reduce([k == nyquist for k in axes])

    @cached_property
    def two_thirds_mask(self) -> np.ndarray:
        """Keep-mask of the two-thirds rule: |k_j| < N/3 on every axis."""
        cut = self.points_per_axis / 3.0
        axes = np.meshgrid(*([np.abs(self.axis_indices)] * self.n), indexing="ij")
        return np.logical_and.reduce([k < cut for k in axes])
