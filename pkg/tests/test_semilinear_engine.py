"""
Tests for the exponential stepper, blow-up bracketing and the Picard iteration.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from damped_waves.kernels import ModelSpec
from damped_waves.linear import State, propagate
from damped_waves.model.exceptions import (
    NonlinearOverflowError,
    PicardDivergenceError,
    StepLimitExceededError,
)
from damped_waves.semilinear import (
    Nonlinearity,
    NonlinearityVariant,
    RunOutcome,
    RunStatus,
    SemilinearEngine,
    StepperConfig,
    picard_iterate,
    run,
)
from damped_waves.spectral import GridSpec, RealField
from tests.conftest import gaussian_field, random_state


#######################################################################
# Nonlinearity and configuration
#######################################################################
@pytest.mark.unit
def test_nonlinearity_values():
    u = np.array([-2.0, -0.5, 0.0, 0.5, 2.0])
    np.testing.assert_allclose(Nonlinearity(3)(u), u**3)
    np.testing.assert_allclose(Nonlinearity(2, "abs_power")(u), u**2)
    np.testing.assert_allclose(Nonlinearity(2.5, NonlinearityVariant.SIGNED_POWER)(u), np.sign(u) * np.abs(u) ** 2.5)


@pytest.mark.unit
@pytest.mark.parametrize("p", [1, 0.5, -2, math.inf])
def test_nonlinearity_rejects_bad_power(p):
    with pytest.raises(ValueError):
        Nonlinearity(p)


@pytest.mark.unit
def test_default_dealias_rule():
    assert Nonlinearity(2).default_dealias()
    assert Nonlinearity(3).default_dealias()
    assert not Nonlinearity(5).default_dealias()
    assert Nonlinearity(3.5, "abs_power").default_dealias()
    assert not Nonlinearity(4, "abs_power").default_dealias()


@pytest.mark.unit
@pytest.mark.parametrize(
    "kwargs",
    [
        {"dt": 0.0},
        {"dt": -0.1},
        {"dt": 0.1, "blowup_threshold": 0.0},
        {"dt": 0.1, "max_steps": 0},
        {"dt": 0.1, "threshold_factor": 1.0},
    ],
)
def test_stepper_config_rejects_invalid_values(kwargs):
    with pytest.raises(ValueError):
        StepperConfig(**kwargs)


@pytest.mark.unit
def test_threshold_resolution():
    assert StepperConfig(dt=0.1, blowup_threshold=50.0).resolve_threshold(3.0) == 50.0
    assert StepperConfig(dt=0.1, threshold_factor=10.0).resolve_threshold(3.0) == 30.0
    assert StepperConfig(dt=0.1, threshold_factor=10.0).resolve_threshold(0.0) == 10.0


@pytest.mark.unit
def test_run_outcome_bracket_invariant():
    with pytest.raises(ValueError):
        RunOutcome(RunStatus.COMPLETED, 1.0, (0.5, 0.6))
    with pytest.raises(ValueError):
        RunOutcome(RunStatus.BLOWUP_DETECTED, 1.0, None)
    RunOutcome(RunStatus.BLOWUP_DETECTED, 1.0, (1.0, 1.01))


#######################################################################
# Stepping
#######################################################################
@pytest.mark.unit
def test_step_without_nonlinearity_is_exact_propagation(small_grid, half_model, rng):
    engine = SemilinearEngine(half_model, Nonlinearity(3), StepperConfig(dt=0.3))
    s = random_state(small_grid, rng)
    stepped = engine.etd_step(s, nonlinear_scale=0.0)
    exact = propagate(half_model, s, 0.3)
    np.testing.assert_allclose(stepped.u.values, exact.u.values, rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(stepped.ut.values, exact.ut.values, rtol=1e-10, atol=1e-12)
    assert stepped.time == pytest.approx(0.3)


@pytest.mark.unit
def test_zero_data_stays_zero(small_grid, half_model):
    outcome = run(half_model, Nonlinearity(3), State.zeros(small_grid), StepperConfig(dt=0.1), 1.0)
    assert outcome.status is RunStatus.COMPLETED
    assert outcome.final_state.max_norm() == 0.0
    assert outcome.final_time == pytest.approx(1.0)


@pytest.mark.integration
def test_stepper_is_first_order_accurate():
    """Halving dt roughly halves the distance between successive refinements."""
    grid = GridSpec(2, 32, 20.0)
    model = ModelSpec(2, Fraction(1, 2), 1.0)
    initial = State(gaussian_field(grid, amplitude=0.5, width=1.5), RealField(grid, np.zeros(grid.shape)))
    finals = []
    for dt in (0.1, 0.05, 0.025):
        outcome = SemilinearEngine(model, Nonlinearity(3), StepperConfig(dt=dt)).run(initial, 1.0)
        assert outcome.status is RunStatus.COMPLETED
        finals.append(outcome.final_state.u.values)
    coarse = np.max(np.abs(finals[0] - finals[1]))
    fine = np.max(np.abs(finals[1] - finals[2]))
    assert fine > 0.0
    assert math.log2(coarse / fine) >= 0.8


@pytest.mark.integration
def test_small_data_runs_to_completion(box_grid, half_model):
    initial = State(RealField(box_grid, np.zeros(box_grid.shape)), gaussian_field(box_grid, amplitude=1e-3))
    outcome = SemilinearEngine(half_model, Nonlinearity(4), StepperConfig(dt=0.1)).run(initial, 5.0)
    assert outcome.status is RunStatus.COMPLETED
    assert outcome.blowup_time_bracket is None
    assert outcome.peak_max_norm < 1e-2
    assert {"u_L2", "u_Linf", "energy_L2", "xt"} <= set(outcome.series)
    xt = outcome.series["xt"].values
    assert np.all(np.diff(xt) >= 0.0)


@pytest.mark.integration
def test_large_positive_forcing_blows_up():
    """f(u) = |u|^2 with a large positive u_1 crosses the threshold; the bracket is dt/8 wide."""
    grid = GridSpec(1, 64, 20.0)
    model = ModelSpec(1, Fraction(1, 2), 1.0)
    initial = State(RealField(grid, np.zeros(grid.shape)), gaussian_field(grid, amplitude=5.0, width=3.0))
    config = StepperConfig(dt=0.01, blowup_threshold=1e4)
    outcome = SemilinearEngine(model, Nonlinearity(2, "abs_power"), config).run(initial, 5.0)
    assert outcome.status is RunStatus.BLOWUP_DETECTED
    lo, hi = outcome.blowup_time_bracket
    assert outcome.final_time <= lo < hi <= outcome.final_time + config.dt
    assert hi - lo <= config.dt / 8 + 1e-15
    assert outcome.final_state.u.max_norm() <= config.blowup_threshold


@pytest.mark.unit
def test_overflowing_coefficients_count_as_blowup():
    """Huge data on a huge box: f(u) is finite but its transform is not."""
    grid = GridSpec(1, 32, 1e10)
    model = ModelSpec(1, Fraction(1, 2), 1.0)
    initial = State(RealField(grid, np.full(grid.shape, 1e100)), RealField(grid, np.zeros(grid.shape)))
    config = StepperConfig(dt=0.1, blowup_threshold=1e305)
    engine = SemilinearEngine(model, Nonlinearity(3), config)

    with pytest.raises(NonlinearOverflowError):
        engine.etd_step(initial)

    outcome = engine.run(initial, 1.0)
    assert outcome.status is RunStatus.BLOWUP_DETECTED
    assert outcome.blowup_time_bracket == pytest.approx((0.0, config.dt / 8))
    assert outcome.final_state is initial


@pytest.mark.unit
def test_step_limit_is_enforced(small_grid, half_model, rng):
    engine = SemilinearEngine(half_model, Nonlinearity(3), StepperConfig(dt=0.1, max_steps=3))
    with pytest.raises(StepLimitExceededError):
        engine.run(random_state(small_grid, rng).scaled(1e-3), 1.0)


@pytest.mark.unit
def test_run_rejects_bad_final_time(small_grid, half_model):
    engine = SemilinearEngine(half_model, Nonlinearity(3), StepperConfig(dt=0.1))
    with pytest.raises(ValueError):
        engine.run(State.zeros(small_grid, time=1.0), 1.0)


#######################################################################
# Picard iteration
#######################################################################
@pytest.mark.integration
def test_picard_contracts_for_small_data(small_grid, half_model):
    initial = State(gaussian_field(small_grid, amplitude=1e-2, width=0.5), RealField(small_grid, np.zeros(small_grid.shape)))
    result = picard_iterate(half_model, Nonlinearity(3), initial, 1.0, j_max=4, quadrature_points=10)
    assert result.converged
    assert [j for j, _ in result.diffs] == [0, 1, 2, 3]
    assert result.diffs[1][1] < result.diffs[0][1]
    assert len(result.ratios) == 3
    assert all(ratio < 1.0 for ratio in result.ratios)
    assert result.final.time == pytest.approx(1.0)
    assert len(result.times) == 11


@pytest.mark.unit
def test_picard_first_iterate_is_linear_flow(small_grid, half_model, rng):
    initial = random_state(small_grid, rng).scaled(1e-4)
    result = picard_iterate(half_model, Nonlinearity(3), initial, 1.0, j_max=2, quadrature_points=4)
    linear = propagate(half_model, initial, 1.0)
    # the second iterate differs from the linear flow by the cubed amplitude only
    assert np.max(np.abs(result.final.u.values - linear.u.values)) < 1e-8


@pytest.mark.unit
@pytest.mark.parametrize("kwargs", [{"j_max": 1}, {"j_max": 2.5}, {"quadrature_points": 0}])
def test_picard_rejects_invalid_arguments(small_grid, half_model, kwargs):
    with pytest.raises(ValueError):
        picard_iterate(half_model, Nonlinearity(3), State.zeros(small_grid), 1.0, **kwargs)


@pytest.mark.integration
def test_picard_strict_mode_raises_on_divergence(small_grid, half_model):
    initial = State(gaussian_field(small_grid, amplitude=20.0, width=0.5), RealField(small_grid, np.zeros(small_grid.shape)))
    with pytest.raises(PicardDivergenceError):
        picard_iterate(half_model, Nonlinearity(3), initial, 2.0, j_max=4, quadrature_points=8, strict=True)
