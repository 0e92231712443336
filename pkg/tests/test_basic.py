#!/usr/bin/env python3
"""
Test suite for Damped Waves Module.
"""

import logging

import pytest


# Test basic imports
def test_basic_imports():
    """Test that basic classes can be imported."""
    from damped_waves import SimulationModule, ModelSpec, GridSpec
    from damped_waves.model.exceptions import DampedWavesError

    assert SimulationModule is not None
    assert ModelSpec is not None
    assert GridSpec is not None
    assert DampedWavesError is not None


# Test version
def test_version():
    """Test that version is defined."""
    import damped_waves

    assert hasattr(damped_waves, "__version__")
    assert damped_waves.__version__ == "0.1.0"


# Test package structure
def test_package_structure():
    """Test that package structure is correct."""
    import damped_waves

    # Engines
    assert hasattr(damped_waves, "LinearEngine")
    assert hasattr(damped_waves, "SemilinearEngine")

    # Calculators
    assert hasattr(damped_waves, "admissible_range")
    assert hasattr(damped_waves, "fit_rate")

    # Exceptions
    assert hasattr(damped_waves, "DampedWavesError")
    assert hasattr(damped_waves, "QuadratureError")


def test_exception_hierarchy():
    """Domain errors are value errors; runtime errors are not."""
    from damped_waves.model.exceptions import (
        ConfigurationError,
        DampedWavesError,
        HypothesisError,
        NonlinearOverflowError,
        QuadratureError,
        StepLimitExceededError,
    )

    for cls in (ConfigurationError, HypothesisError):
        assert issubclass(cls, DampedWavesError)
        assert issubclass(cls, ValueError)
    for cls in (QuadratureError, StepLimitExceededError, NonlinearOverflowError):
        assert issubclass(cls, DampedWavesError)
        assert not issubclass(cls, ValueError)


def test_configuration_error_keeps_violations():
    """ConfigurationError carries every violation."""
    from damped_waves.model.exceptions import ConfigurationError

    error = ConfigurationError(["first", "second"])
    assert error.violations == ["first", "second"]
    assert "first" in str(error) and "second" in str(error)


def test_simulation_module_logger_named_by_class():
    """Every module logs through a logger named after its class."""
    from fractions import Fraction

    from damped_waves import LinearEngine, ModelSpec
    from damped_waves.model import ModuleStatus

    engine = LinearEngine(ModelSpec(2, Fraction(1, 2), 2.0))
    assert engine.get_logger().name == "LinearEngine"
    assert engine.get_status() is ModuleStatus.IDLE
    assert engine.get_name() == "LinearEngine"
    assert engine.get_log_level() == logging.INFO
    assert LinearEngine(ModelSpec(2, Fraction(1, 2), 2.0), instance_id=7).get_instance_id() == 7


def test_semilinear_engine_accessors():
    """The stepper exposes its model, nonlinearity, stepper settings and linear engine."""
    from fractions import Fraction

    from damped_waves import ModelSpec, Nonlinearity, SemilinearEngine, StepperConfig

    model = ModelSpec(2, Fraction(1, 2), 2.0)
    nonlinearity = Nonlinearity(3)
    config = StepperConfig(dt=0.05)
    engine = SemilinearEngine(model, nonlinearity, config, log_level=logging.DEBUG)

    assert engine.get_model() is model
    assert engine.get_nonlinearity() is nonlinearity
    assert engine.get_config() is config
    assert engine.get_linear_engine().get_model() is model
    assert engine.get_linear_engine().get_log_level() == logging.DEBUG
    assert engine.is_dealiased() == config.resolve_dealias(nonlinearity)
