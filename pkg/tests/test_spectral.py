"""
Tests for the periodic grid, spectral transforms, multipliers and norms.
"""

import numpy as np
import pytest

from damped_waves.model.exceptions import FieldShapeError, GridSpecError, SpectralSymmetryError
from damped_waves.spectral import (
    GridSpec,
    RealField,
    SpectralField,
    apply_multiplier,
    derivative_tensor_magnitude,
    forward_transform,
    frac_symbol,
    gradient,
    grid_norm,
    inverse_transform,
    sobolev_seminorm,
)
from tests.conftest import gaussian_field, random_field


@pytest.mark.unit
@pytest.mark.parametrize(
    "n, points, length",
    [(0, 16, 1.0), (4, 16, 1.0), (2, 7, 1.0), (2, 6, 1.0), (2, 16, 0.0), (2, 16, -3.0)],
)
def test_grid_rejects_invalid_descriptions(n, points, length):
    """Dimension, parity, minimum size and box length are validated."""
    with pytest.raises(GridSpecError):
        GridSpec(n, points, length)


@pytest.mark.unit
def test_grid_geometry():
    """Spacing, cell volume and coordinate range follow the box."""
    grid = GridSpec(2, 16, 8.0)
    assert grid.shape == (16, 16)
    assert grid.spacing == pytest.approx(0.5)
    assert grid.cell_volume == pytest.approx(0.25)
    assert grid.axis_coordinates[0] == pytest.approx(-4.0)
    assert grid.axis_coordinates[-1] == pytest.approx(3.5)
    assert grid.wavenumber_magnitude[0, 0] == 0.0


@pytest.mark.unit
def test_two_thirds_mask_keeps_low_modes():
    """|k_j| < N/3 on each axis survives."""
    grid = GridSpec(1, 12, 1.0)
    kept = np.sort(grid.axis_indices[grid.two_thirds_mask])
    assert kept.tolist() == [-3, -2, -1, 0, 1, 2, 3]


@pytest.mark.unit
def test_zero_mode_is_grid_integral(small_grid, rng):
    """The zero coefficient equals the grid quadrature of the field."""
    u = random_field(small_grid, rng)
    U = forward_transform(u)
    assert U.zero_mode.real == pytest.approx(np.sum(u.values) * small_grid.cell_volume, abs=1e-12)


@pytest.mark.unit
def test_round_trip_and_parseval_on_random_fields(rng):
    """Inverse(forward(u)) = u and the grid L2 norm equals the spectral one."""
    for case in range(100):
        grid = GridSpec(1 + case % 3, 8 if case % 3 == 2 else 16, float(rng.uniform(1.0, 20.0)))
        u = RealField(grid, rng.normal(size=grid.shape))
        back = inverse_transform(forward_transform(u))
        np.testing.assert_allclose(back.values, u.values, rtol=1e-11, atol=1e-11)
        assert sobolev_seminorm(forward_transform(u), 0.0) == pytest.approx(grid_norm(u, 2.0), rel=1e-11)


@pytest.mark.unit
def test_transform_is_linear(small_grid, rng):
    """F(a u + b v) = a F(u) + b F(v)."""
    for _ in range(100):
        u, v = random_field(small_grid, rng), random_field(small_grid, rng)
        a, b = rng.normal(size=2)
        left = forward_transform(u * a + v * b).coefficients
        right = a * forward_transform(u).coefficients + b * forward_transform(v).coefficients
        np.testing.assert_allclose(left, right, atol=1e-10)


@pytest.mark.unit
def test_inverse_rejects_non_symmetric_coefficients(small_grid, rng):
    """A real field cannot come from arbitrary complex coefficients."""
    coefficients = rng.normal(size=small_grid.shape) + 1j * rng.normal(size=small_grid.shape)
    with pytest.raises(SpectralSymmetryError):
        inverse_transform(SpectralField(small_grid, coefficients))


@pytest.mark.unit
def test_field_shape_is_checked(small_grid):
    """Values must match the grid shape and be finite."""
    with pytest.raises(FieldShapeError):
        RealField(small_grid, np.zeros((4, 4)))
    with pytest.raises(FieldShapeError):
        RealField(small_grid, np.full(small_grid.shape, np.nan))


@pytest.mark.unit
def test_frac_symbol_zero_mode():
    """|xi|^0 is 1 everywhere; positive orders vanish at the zero mode."""
    grid = GridSpec(2, 8, 2.0 * np.pi)
    assert np.all(frac_symbol(grid, 0.0) == 1.0)
    symbol = frac_symbol(grid, 0.5)
    assert symbol[0, 0] == 0.0
    assert symbol[1, 0] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        frac_symbol(grid, -1.0)


@pytest.mark.unit
def test_spectral_derivative_of_sine():
    """d/dx sin(2 pi x / L) = (2 pi / L) cos(2 pi x / L)."""
    grid = GridSpec(1, 32, 4.0)
    x = grid.axis_coordinates
    u = RealField(grid, np.sin(2 * np.pi * x / 4.0))
    (du,) = gradient(u)
    np.testing.assert_allclose(du.values, (2 * np.pi / 4.0) * np.cos(2 * np.pi * x / 4.0), atol=1e-12)


@pytest.mark.unit
def test_laplacian_multiplier_on_cosine():
    """(-Laplace) cos(k x) = k^2 cos(k x)."""
    grid = GridSpec(1, 32, 2.0 * np.pi)
    x = grid.axis_coordinates
    u = RealField(grid, np.cos(3.0 * x))
    lap = apply_multiplier(u, frac_symbol(grid, 1.0))
    np.testing.assert_allclose(lap.values, 9.0 * np.cos(3.0 * x), atol=1e-11)


@pytest.mark.unit
def test_gradient_norm_matches_first_seminorm(box_grid):
    """For a resolved Gaussian, ||grad u||_2 equals the H-dot^1 seminorm."""
    u = gaussian_field(box_grid)
    magnitude = derivative_tensor_magnitude(u, 1)
    assert grid_norm(magnitude, 2.0) == pytest.approx(sobolev_seminorm(forward_transform(u), 1.0), rel=1e-8)


@pytest.mark.unit
def test_grid_norms():
    """L^inf is the max; L^m of a constant is c * volume^(1/m)."""
    grid = GridSpec(2, 8, 2.0)
    u = RealField(grid, np.full(grid.shape, -3.0))
    assert grid_norm(u, np.inf) == 3.0
    assert grid_norm(u, 1.0) == pytest.approx(3.0 * 4.0)
    assert grid_norm(u, 1.5) == pytest.approx(3.0 * 4.0 ** (1 / 1.5))
    assert grid_norm(RealField.zeros(grid), 2.0) == 0.0
    with pytest.raises(ValueError):
        grid_norm(u, 0.5)
