#######################################################################
# Project: Damped Waves Module
# File: fields.py
# Description: Physical and spectral fields, transforms, multipliers and norms
# Author: AbigailWilliams1692
# Created: 2026-09-08
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import itertools
import math
from dataclasses import dataclass
from typing import List, Union

# Third-party Packages
import numpy as np
import scipy.fft

# Local Packages
from damped_waves.model.exceptions import FieldShapeError, SpectralSymmetryError
from damped_waves.spectral.grid import GridSpec

SYMMETRY_RTOL = 1e-10
Scalar = Union[int, float]


#######################################################################
# Field Types
#######################################################################
@dataclass(frozen=True)
class RealField:
    """
    Real values at the grid points. Immutable: the array is made read-only.
    """

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != self.grid.shape:
            raise FieldShapeError(
                f"Field shape {values.shape} does not match grid shape {self.grid.shape}."
            )
        if not np.all(np.isfinite(values)):
            raise FieldShapeError("Field values must be finite.")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: GridSpec) -> "RealField":
        return cls(grid=grid, values=np.zeros(grid.shape))

    def _check_grid(self, other: "RealField") -> None:
        if other.grid != self.grid:
            raise FieldShapeError("Fields live on different grids.")

    def __add__(self, other: "RealField") -> "RealField":
        self._check_grid(other)
        return RealField(self.grid, self.values + other.values)

    def __sub__(self, other: "RealField") -> "RealField":
        self._check_grid(other)
        return RealField(self.grid, self.values - other.values)

    def __mul__(self, factor: Scalar) -> "RealField":
        return RealField(self.grid, factor * self.values)

    __rmul__ = __mul__

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def mean(self) -> float:
        return float(np.mean(self.values))


@dataclass(frozen=True)
class SpectralField:
    """
    Coefficients on the frequency lattice, U(xi) = Delta V * sum_x u(x) exp(-i xi.x).
    """

    grid: GridSpec
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coefficients = np.array(self.coefficients, dtype=complex)
        if coefficients.shape != self.grid.shape:
            raise FieldShapeError(
                f"Coefficient shape {coefficients.shape} does not match grid shape {self.grid.shape}."
            )
        coefficients.flags.writeable = False
        object.__setattr__(self, "coefficients", coefficients)

    def __add__(self, other: "SpectralField") -> "SpectralField":
        if other.grid != self.grid:
            raise FieldShapeError("Fields live on different grids.")
        return SpectralField(self.grid, self.coefficients + other.coefficients)

    def __mul__(self, multiplier: Union[Scalar, np.ndarray]) -> "SpectralField":
        return SpectralField(self.grid, self.coefficients * multiplier)

    __rmul__ = __mul__

    @property
    def zero_mode(self) -> complex:
        return complex(self.coefficients[(0,) * self.grid.n])

    def conjugate_reflection(self) -> np.ndarray:
        """conj(U(-xi)) on the lattice."""
        axes = tuple(range(self.grid.n))
        return np.conj(np.roll(np.flip(self.coefficients, axis=axes), 1, axis=axes))

    def is_conjugate_symmetric(self, rtol: float = SYMMETRY_RTOL) -> bool:
        scale = float(np.max(np.abs(self.coefficients))) if self.coefficients.size else 0.0
        defect = float(np.max(np.abs(self.coefficients - self.conjugate_reflection())))
        return defect <= rtol * scale + np.finfo(float).tiny


#######################################################################
# Transforms
#######################################################################
def forward_transform(u: RealField) -> SpectralField:
    """
    DFT with the grid measure: the zero mode equals sum(u) * Delta V.

    :param u: RealField: Physical values.
    :return: SpectralField: Coefficients, Parseval holds with frequency cell 1/L^n.
    """
    return SpectralField(u.grid, scipy.fft.fftn(u.values) * u.grid.cell_volume)


def inverse_transform(U: SpectralField) -> RealField:
    """
    Inverse of ``forward_transform`` returning a real field.

    :param U: SpectralField: Conjugate-symmetric coefficients.
    :return: RealField: Physical values.
    :raises SpectralSymmetryError: If the coefficients are not conjugate symmetric.
    """
    if not U.is_conjugate_symmetric():
        raise SpectralSymmetryError(
            "Coefficients are not conjugate symmetric; no real field corresponds to them."
        )
    values = scipy.fft.ifftn(U.coefficients).real / U.grid.cell_volume
    return RealField(U.grid, values)


#######################################################################
# Multipliers
#######################################################################
def frac_symbol(grid: GridSpec, s: float) -> np.ndarray:
    """
    Symbol |xi|^{2s} of (-Delta)^s. The zero mode is 1 for s = 0 and 0 for s > 0.

    :param grid: GridSpec: The lattice.
    :param s: float: Nonnegative order.
    :return: np.ndarray: Real multiplier array.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return np.ones(grid.shape)
    symbol = grid.wavenumber_squared**s
    symbol[(0,) * grid.n] = 0.0
    return symbol


def derivative_multiplier(grid: GridSpec, axes: tuple) -> np.ndarray:
    """
    Multiplier of the partial derivative along the listed axes (with repetition).

    Odd derivatives vanish on the unpaired Nyquist plane so real fields stay real.
    """
    multiplier = np.ones(grid.shape, dtype=complex)
    for axis in axes:
        multiplier = multiplier * (1j * grid.wavenumbers[axis])
    if len(axes) % 2:
        multiplier[grid.nyquist_mask] = 0.0
    return multiplier


def apply_multiplier(u: RealField, multiplier: np.ndarray) -> RealField:
    """Apply a Fourier multiplier to a real field."""
    return inverse_transform(forward_transform(u) * multiplier)


def gradient(u: RealField) -> List[RealField]:
    """Spectral gradient, one field per axis."""
    U = forward_transform(u)
    return [
        inverse_transform(U * derivative_multiplier(u.grid, (axis,)))
        for axis in range(u.grid.n)
    ]


def derivative_tensor_magnitude(u: RealField, k: int) -> RealField:
    """
    Pointwise Frobenius magnitude of the k-th derivative tensor,
    sqrt(sum over ordered index tuples of |d^alpha u|^2).
    """
    if k == 0:
        return RealField(u.grid, np.abs(u.values))
    U = forward_transform(u)
    total = np.zeros(u.grid.shape)
    for axes in itertools.product(range(u.grid.n), repeat=k):
        total += inverse_transform(U * derivative_multiplier(u.grid, axes)).values ** 2
    return RealField(u.grid, np.sqrt(total))


#######################################################################
# Norms
#######################################################################
def grid_norm(u: RealField, m: float) -> float:
    """
    Grid-quadrature L^m norm (sum |u|^m Delta V)^{1/m}, or the max for m = inf.

    :param u: RealField: The field.
    :param m: float: Exponent in [1, inf].
    :return: float: The norm.
    """
    if not m >= 1:
        raise ValueError("m must satisfy m >= 1")
    magnitude = np.abs(u.values)
    if math.isinf(m):
        return float(np.max(magnitude))
    peak = float(np.max(magnitude))
    if peak == 0.0:
        return 0.0
    # Scale by the peak to keep |u|^m representable
    return peak * float(np.sum((magnitude / peak) ** m) * u.grid.cell_volume) ** (1.0 / m)


def sobolev_seminorm(U: SpectralField, kappa: float) -> float:
    """
    Homogeneous Sobolev seminorm (sum |xi|^{2 kappa} |U|^2 / L^n)^{1/2}; equals the
    grid L2 norm at kappa = 0.

    :param U: SpectralField: Coefficients.
    :param kappa: float: Nonnegative smoothness.
    :return: float: The seminorm.
    """
    weight = frac_symbol(U.grid, kappa)
    return float(np.sqrt(np.sum(weight * np.abs(U.coefficients) ** 2) * U.grid.frequency_cell))
