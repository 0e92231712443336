from damped_waves.linear.state import RadialProfile, State
from damped_waves.linear.radial_quadrature import radial_norm, unit_sphere_area
from damped_waves.linear.linear_engine import (
    LinearEngine,
    frequency_split,
    propagate,
    wrap_time,
)
from damped_waves.linear.grid_series_provider import GridSeries_Provider, measure
from damped_waves.linear.oracle_series_provider import OracleSeries_Provider
from damped_waves.linear.decay_series_wrapper import DecaySeries_Wrapper, decay_series

__all__ = [
    "RadialProfile",
    "State",
    "radial_norm",
    "unit_sphere_area",
    "LinearEngine",
    "frequency_split",
    "propagate",
    "wrap_time",
    "GridSeries_Provider",
    "measure",
    "OracleSeries_Provider",
    "DecaySeries_Wrapper",
    "decay_series",
]
