#######################################################################
# Project: Damped Waves Module
# File: __init__.py
# Description: Damped Waves Module package initialization
# Author: AbigailWilliams1692
# Created: 2026-09-02
# Updated: 2026-10-17
#######################################################################

#######################################################################
# Import Core Classes
#######################################################################
from damped_waves.model import SimulationModule, Quantity, TimeSeries
from damped_waves.model.exceptions import (
    DampedWavesError,
    ConfigurationError,
    HypothesisError,
    QuadratureError,
    StepLimitExceededError,
    NonlinearOverflowError,
)

#######################################################################
# Import Simulation Components
#######################################################################
# Spectral grid and kernels
from damped_waves.spectral import GridSpec, RealField, SpectralField
from damped_waves.kernels import ModelSpec, char_roots, kernel_values

# Linear and semilinear engines
from damped_waves.linear import LinearEngine, State, RadialProfile, decay_series
from damped_waves.semilinear import (
    Nonlinearity,
    StepperConfig,
    SemilinearEngine,
    RunOutcome,
    picard_iterate,
)

# Exponent calculators and analysis
from damped_waves.exponents import admissible_range, blowup_threshold, gap_report, predicted_rates
from damped_waves.analysis import fit_rate, compare, xt_norm

#######################################################################
# Public API
#######################################################################
__all__ = [
    # Core classes
    "SimulationModule",
    "Quantity",
    "TimeSeries",

    # Exceptions
    "DampedWavesError",
    "ConfigurationError",
    "HypothesisError",
    "QuadratureError",
    "StepLimitExceededError",
    "NonlinearOverflowError",

    # Spectral grid and kernels
    "GridSpec",
    "RealField",
    "SpectralField",
    "ModelSpec",
    "char_roots",
    "kernel_values",

    # Engines
    "LinearEngine",
    "State",
    "RadialProfile",
    "decay_series",
    "Nonlinearity",
    "StepperConfig",
    "SemilinearEngine",
    "RunOutcome",
    "picard_iterate",

    # Exponents and analysis
    "admissible_range",
    "blowup_threshold",
    "gap_report",
    "predicted_rates",
    "fit_rate",
    "compare",
    "xt_norm",
]

#######################################################################
# Version Information
#######################################################################
__version__ = "0.1.0"
__author__ = "AbigailWilliams1692"
__email__ = "alfred.xy1020@gmail.com"
