#######################################################################
# Project: Damped Waves Module
# File: exceptions.py
# Description: Exception classes for the simulator and its calculators
# Author: AbigailWilliams1692
# Created: 2026-09-02
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from typing import List, Optional


#######################################################################
# Base Exception
#######################################################################
class DampedWavesError(Exception):
    """Base exception for all damped-waves errors."""
    pass


#######################################################################
# Configuration & Domain Exceptions
#######################################################################
class ConfigurationError(DampedWavesError, ValueError):
    """Raised when an experiment configuration is invalid. Carries every violation."""

    def __init__(self, violations: List[str], message: Optional[str] = None) -> None:
        self.violations = list(violations)
        super().__init__(message or "; ".join(self.violations))


class ModelSpecError(DampedWavesError, ValueError):
    """Raised when (n, sigma, mu) lie outside the model domain."""
    pass


class GridSpecError(DampedWavesError, ValueError):
    """Raised when a periodic grid description is invalid."""
    pass


class HypothesisError(DampedWavesError, ValueError):
    """Raised when a query lies outside the hypotheses of the corresponding statement."""
    pass


class DataClassError(DampedWavesError, ValueError):
    """Raised when a data-class norm has no grid realization."""
    pass


class DataPresetError(DampedWavesError, ValueError):
    """Raised when an initial-data preset is malformed."""
    pass


#######################################################################
# Spectral Exceptions
#######################################################################
class FieldShapeError(DampedWavesError, ValueError):
    """Raised when field values do not match their grid or are not finite."""
    pass


class SpectralSymmetryError(DampedWavesError, ValueError):
    """Raised when a real field is demanded from non conjugate-symmetric coefficients."""
    pass


#######################################################################
# Numerical Runtime Exceptions
#######################################################################
class QuadratureError(DampedWavesError):
    """Raised when adaptive radial quadrature stalls above its tolerance."""
    pass


class StepLimitExceededError(DampedWavesError):
    """Raised when a run exhausts max_steps before reaching its horizon."""
    pass


class NonlinearOverflowError(DampedWavesError):
    """Raised when the nonlinear term overflows; a blow-up candidate for the driver."""
    pass


class PicardDivergenceError(DampedWavesError):
    """Raised in strict mode when the Picard differences stop contracting."""
    pass


#######################################################################
# Analysis Exceptions
#######################################################################
class FitWindowError(DampedWavesError, ValueError):
    """Raised when a fit window holds too few points."""
    pass


class NonPositiveSeriesError(DampedWavesError, ValueError):
    """Raised when a log-scale analysis meets a nonpositive value."""
    pass


class MissingQuantityError(DampedWavesError, KeyError):
    """Raised when a series bundle lacks a required quantity."""
    pass


class SeriesAlignmentError(DampedWavesError, ValueError):
    """Raised when series in one bundle are sampled at different times."""
    pass


#######################################################################
# Series Provider Exceptions
#######################################################################
class SeriesProviderError(DampedWavesError):
    """Base exception for series provider errors."""
    pass


class QuantityNotFoundError(SeriesProviderError):
    """Raised when no method is registered for a quantity kind."""
    pass


class ReturnValueNotMatchedError(SeriesProviderError):
    """Raised when a quantity method returns a non-finite or negative value."""
    pass


class SeriesProviderNotFoundError(SeriesProviderError):
    """Raised when no provider class is registered for a mode."""
    pass


class SeriesProviderInitializationError(SeriesProviderError):
    """Raised when a provider cannot be constructed."""
    pass
