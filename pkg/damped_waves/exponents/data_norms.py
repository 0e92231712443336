#######################################################################
# Project: Damped Waves Module
# File: data_norms.py
# Description: Initial-data functionals: blow-up sign condition and D_m^k norm
# Author: AbigailWilliams1692
# Created: 2026-09-22
# Updated: 2026-10-13
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import math

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.kernels import ModelSpec
from damped_waves.model.exceptions import DataClassError, FieldShapeError
from damped_waves.spectral import (
    GridSpec,
    RealField,
    apply_multiplier,
    derivative_tensor_magnitude,
    forward_transform,
    frac_symbol,
    grid_norm,
    sobolev_seminorm,
)


#######################################################################
# Blow-up Data Functional
#######################################################################
def blowdata_value(model: ModelSpec, u0: RealField, u1: RealField) -> float:
    """
    Grid quadrature of the integral of u1 + mu (-Laplace)^sigma u0.

    On the torus the fractional term has zero mean, so the value equals the
    integral of u1; the whole-space sign condition is only meaningful for data
    supported well inside the box.

    :param model: ModelSpec: Supplies mu and sigma.
    :param u0: RealField: Initial displacement.
    :param u1: RealField: Initial velocity.
    :return: float: The integral.
    """
    if u0.grid != u1.grid:
        raise FieldShapeError("u0 and u1 must live on the same grid")
    damping_term = apply_multiplier(u0, frac_symbol(u0.grid, model.sigma_float))
    integrand = u1.values + model.mu * damping_term.values
    return float(np.sum(integrand) * u1.grid.cell_volume)


#######################################################################
# Mixed Data Norm
#######################################################################
def _bessel_norm(u: RealField, m: float, k: float) -> float:
    """||u||_{L^m} + ||D^k u||_{L^m}, with the derivative term dropped at k = 0."""
    base = grid_norm(u, m)
    if k == 0:
        return base
    if float(k).is_integer():
        return base + grid_norm(derivative_tensor_magnitude(u, int(k)), m)
    if m != 2:
        raise DataClassError(f"fractional k={k} has no grid realization for m={m} != 2")
    return base + sobolev_seminorm(forward_transform(u), float(k))


def dm_norm(u0: RealField, u1: RealField, m: float, k: float, grid: GridSpec) -> float:
    """
    ||u0||_1 + ||u0||_{H^{k,m}} + ||u1||_1 + ||u1||_m on the grid.

    :param u0: RealField: Initial displacement.
    :param u1: RealField: Initial velocity.
    :param m: float: Lebesgue exponent in (1,2].
    :param k: float: Nonnegative regularity; fractional values need m = 2.
    :param grid: GridSpec: The grid both fields live on.
    :return: float: The norm.
    """
    if not 1 < m <= 2:
        raise DataClassError(f"m must lie in (1,2], got {m}")
    if not k >= 0 or math.isinf(k):
        raise DataClassError(f"k must be a finite nonnegative number, got {k}")
    if u0.grid != grid or u1.grid != grid:
        raise FieldShapeError("u0 and u1 must live on the given grid")
    return (
        grid_norm(u0, 1.0)
        + _bessel_norm(u0, m, k)
        + grid_norm(u1, 1.0)
        + grid_norm(u1, m)
    )
