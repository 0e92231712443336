#######################################################################
# Project: Damped Waves Module
# File: __init__.py
# Description: Core base classes, value types and exceptions
# Author: AbigailWilliams1692
# Created: 2026-09-02
# Updated: 2026-10-12
#######################################################################

from damped_waves.model.simulation_module import ModuleStatus, SimulationModule
from damped_waves.model.time_series import Quantity, TimeSeries
from damped_waves.model.series_provider import SeriesProvider
from damped_waves.model.series_provider_wrapper import SeriesProvider_Wrapper

__all__ = [
    "ModuleStatus",
    "SimulationModule",
    "Quantity",
    "TimeSeries",
    "SeriesProvider",
    "SeriesProvider_Wrapper",
]
