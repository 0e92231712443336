"""
Tests for the model description, characteristic roots and fundamental kernels.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from damped_waves.kernels import (
    ModelSpec,
    RootRegime,
    char_roots,
    kernel_arrays,
    kernel_values,
    ode_residual,
)
from damped_waves.model.exceptions import ModelSpecError


@pytest.mark.unit
@pytest.mark.parametrize("n, sigma, mu", [(0, 0.5, 1.0), (2, 0, 1.0), (2, 1.5, 1.0), (2, 0.5, 0.0), (2, 0.5, -1.0)])
def test_model_spec_rejects_out_of_domain(n, sigma, mu):
    """n >= 1, sigma in (0,1] and mu > 0 are enforced."""
    with pytest.raises(ModelSpecError):
        ModelSpec(n, sigma, mu)


@pytest.mark.unit
def test_transition_radius():
    """Real/complex transition at (mu/2)^(1/(1-2 sigma)), none at sigma = 1/2."""
    assert ModelSpec(2, Fraction(1, 2), 1.0).transition_radius() == math.inf
    assert ModelSpec(2, Fraction(1, 4), 2.0).transition_radius() == pytest.approx(1.0)
    assert ModelSpec(2, Fraction(3, 4), 4.0).transition_radius() == pytest.approx(0.25)


@pytest.mark.unit
@pytest.mark.parametrize(
    "mu, expected",
    [(1.0, RootRegime.COMPLEX), (3.0, RootRegime.REAL), (2.0, RootRegime.DEGENERATE)],
)
def test_half_damping_regime_does_not_depend_on_frequency(mu, expected):
    """At sigma = 1/2 the discriminant is mu^2 - 4 for every |xi| > 0."""
    model = ModelSpec(2, Fraction(1, 2), mu)
    for r in (0.01, 1.0, 50.0):
        assert char_roots(model, r).regime is expected
    assert char_roots(model, 0.0).regime is RootRegime.ZERO


@pytest.mark.unit
@pytest.mark.parametrize("sigma, mu, r", [(0.25, 2.0, 0.3), (0.25, 2.0, 4.0), (0.75, 1.0, 0.2), (1.0, 3.0, 2.0), (0.5, 1.0, 5.0)])
def test_roots_solve_the_characteristic_quadratic(sigma, mu, r):
    """lambda^2 + mu r^(2 sigma) lambda + r^2 = 0 for both roots."""
    roots = char_roots(ModelSpec(2, sigma, mu), r)
    a = mu * r ** (2 * sigma)
    for lam in (roots.lambda_plus, roots.lambda_minus):
        assert abs(lam**2 + a * lam + r**2) <= 1e-10 * (r**2 + a * abs(lam) + 1.0)
    assert roots.lambda_plus.real <= 0 and roots.lambda_minus.real <= 0


@pytest.mark.unit
@pytest.mark.parametrize("sigma, mu, r", [(0.25, 2.0, 0.3), (0.25, 2.0, 4.0), (0.5, 2.0, 1.5), (1.0, 3.0, 2.0), (0.5, 1.0, 0.0)])
def test_initial_conditions_are_exact(sigma, mu, r):
    """(K0, K1, dK0, dK1, int K1) = (1, 0, 0, 1, 0) at t = 0."""
    values = kernel_values(ModelSpec(2, sigma, mu), r, 0.0, 0.0)
    assert (values.k0, values.k1, values.dtk0, values.dtk1, values.int_k1) == (1.0, 0.0, 0.0, 1.0, 0.0)


@pytest.mark.unit
def test_degenerate_half_damping_kernels():
    """mu = 2, sigma = 1/2 has the double root -|xi|: K1 = t exp(-|xi| t)."""
    model = ModelSpec(2, Fraction(1, 2), 2.0)
    for r, t in itertools.product((0.1, 1.0, 3.0), (0.5, 2.0, 10.0)):
        values = kernel_values(model, r, t)
        assert values.k1 == pytest.approx(t * math.exp(-r * t), rel=1e-12)
        assert values.k0 == pytest.approx((1.0 + r * t) * math.exp(-r * t), rel=1e-12)
        assert values.dtk0 == pytest.approx(-(r**2) * t * math.exp(-r * t), rel=1e-12)


@pytest.mark.unit
def test_zero_mode_kernels():
    """At xi = 0 the mode is w'' = 0: K0 = 1, K1 = t and int K1 = h^2 / 2."""
    values = kernel_values(ModelSpec(3, 0.75, 1.0), 0.0, 4.0, 3.0)
    assert values.k0 == 1.0 and values.k1 == 4.0 and values.dtk1 == 1.0 and values.dtk0 == 0.0
    assert values.int_k1 == pytest.approx(4.5)


@pytest.mark.unit
def test_ode_residual_sweep():
    """Kernels solve the mode equation in every regime, including near-double roots."""
    worst = 0.0
    sigmas = (0.2, 0.25, 0.5, 0.75, 1.0)
    mus = (0.5, 2.0, 2.0 + 1e-7, 5.0)
    radii = (0.01, 0.3, 0.999999, 1.0, 3.0)
    times = (0.5, 2.0, 5.0)
    for sigma, mu, r, t in itertools.product(sigmas, mus, radii, times):
        worst = max(worst, ode_residual(ModelSpec(2, sigma, mu), r, t, 1e-4))
    assert worst < 1e-6


@pytest.mark.unit
@pytest.mark.parametrize("sigma, mu", [(0.25, 2.0), (0.75, 4.0), (Fraction(1, 3), 1.5)])
def test_kernels_are_continuous_across_the_regime_boundary(sigma, mu):
    """Values just below and above the transition radius agree."""
    model = ModelSpec(2, sigma, mu)
    r_star = model.transition_radius()
    below = kernel_values(model, r_star * (1 - 1e-9), 2.0, 1.0)
    above = kernel_values(model, r_star * (1 + 1e-9), 2.0, 1.0)
    for field in ("k0", "k1", "dtk0", "dtk1", "int_k1"):
        assert getattr(below, field) == pytest.approx(getattr(above, field), rel=1e-5, abs=1e-12)


@pytest.mark.unit
@pytest.mark.parametrize(
    "sigma, mu, r, h",
    [(0.25, 2.0, 0.2, 0.5), (1.0, 4.0, 2.0, 3.0), (0.5, 1.0, 3.0, 2.0), (0.5, 2.0, 0.7, 4.0), (0.75, 1.0, 1.2, 1.5)],
)
def test_integral_of_k1_matches_quadrature(sigma, mu, r, h):
    """The closed-form integral of K1 agrees with adaptive quadrature."""
    model = ModelSpec(2, sigma, mu)
    reference, _ = integrate.quad(lambda s: kernel_values(model, r, s).k1, 0.0, h, epsabs=1e-13, epsrel=1e-11)
    assert kernel_values(model, r, 0.0, h).int_k1 == pytest.approx(reference, rel=1e-7, abs=1e-12)


@pytest.mark.unit
def test_kernel_arrays_match_scalar_values():
    """Vectorized evaluation agrees with the scalar entry point."""
    model = ModelSpec(2, 0.75, 1.5)
    radii = np.array([0.0, 0.1, 0.9, 2.5])
    arrays = kernel_arrays(model, radii, 1.7, h_for_integral=0.3)
    for i, r in enumerate(radii):
        values = kernel_values(model, float(r), 1.7, 0.3)
        assert arrays.k1[i] == pytest.approx(values.k1)
        assert arrays.int_k1[i] == pytest.approx(values.int_k1)
    with pytest.raises(ValueError):
        kernel_arrays(model, radii, -1.0)
