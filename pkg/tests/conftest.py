"""
Shared fixtures for the Damped Waves Module test suite.
"""

from fractions import Fraction

import numpy as np
import pytest

from damped_waves.kernels import ModelSpec
from damped_waves.linear import State
from damped_waves.spectral import GridSpec, RealField


@pytest.fixture
def rng():
    """Seeded generator so randomized property tests are reproducible."""
    return np.random.default_rng(20261017)


@pytest.fixture
def small_grid():
    return GridSpec(2, 16, 2.0 * np.pi)


@pytest.fixture
def box_grid():
    """2-d box wide enough for unit-width Gaussians."""
    return GridSpec(2, 64, 40.0)


@pytest.fixture
def half_model():
    return ModelSpec(2, Fraction(1, 2), 2.0)


def gaussian_field(grid, amplitude=1.0, width=1.0):
    return RealField(grid, amplitude * np.exp(-grid.radius**2 / (2.0 * width**2)))


def random_field(grid, rng, max_mode=4):
    """Real band-limited field with modes |k_j| <= max_mode."""
    values = np.zeros(grid.shape)
    for _ in range(6):
        phase = rng.uniform(0, 2 * np.pi)
        k = rng.integers(-max_mode, max_mode + 1, size=grid.n)
        arg = sum(2 * np.pi * kj * x / grid.box_length for kj, x in zip(k, grid.coordinates))
        values = values + rng.normal() * np.cos(arg + phase)
    return RealField(grid, values)


def random_state(grid, rng, time=0.0):
    return State(random_field(grid, rng), random_field(grid, rng), time)
