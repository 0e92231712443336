#######################################################################
# Project: Damped Waves Module
# File: grid_series_provider.py
# Description: Norm histories from one-shot exact propagation on the grid
# Author: AbigailWilliams1692
# Created: 2026-09-16
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
from typing import Any, Callable, Dict, Optional

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.kernels import ModelSpec
from damped_waves.linear.linear_engine import LinearEngine, wrap_time
from damped_waves.linear.state import State
from damped_waves.model.series_provider import SeriesProvider
from damped_waves.model.time_series import Quantity
from damped_waves.spectral import (
    RealField,
    forward_transform,
    gradient,
    grid_norm,
    sobolev_seminorm,
)


#######################################################################
# State Measurements
#######################################################################
def _gradient_magnitude(u: RealField) -> np.ndarray:
    return np.sqrt(sum(g.values**2 for g in gradient(u)))


def _u_value(state: State, quantity: Quantity) -> float:
    return grid_norm(state.u, quantity.order)


def _ut_value(state: State, quantity: Quantity) -> float:
    return grid_norm(state.ut, quantity.order)


def _grad_value(state: State, quantity: Quantity) -> float:
    return grid_norm(RealField(state.grid, _gradient_magnitude(state.u)), quantity.order)


def _energy_value(state: State, quantity: Quantity) -> float:
    density = np.sqrt(_gradient_magnitude(state.u) ** 2 + state.ut.values**2)
    return grid_norm(RealField(state.grid, density), quantity.order)


def _hdot_value(state: State, quantity: Quantity) -> float:
    return sobolev_seminorm(forward_transform(state.u), quantity.order)


def _grad2_value(state: State, quantity: Quantity) -> float:
    return sobolev_seminorm(forward_transform(state.u), 2.0)


_MEASURES: Dict[str, Callable[[State, Quantity], float]] = {
    "u_Lm": _u_value,
    "ut_Lm": _ut_value,
    "grad_Lm": _grad_value,
    "energy_Lm": _energy_value,
    "hdot": _hdot_value,
    "grad2_L2": _grad2_value,
}


def measure(state: State, quantity: Quantity) -> float:
    """
    Value of a quantity for a grid state.

    :param state: State: The state.
    :param quantity: Quantity: The norm to evaluate.
    :return: float: The norm.
    """
    return _MEASURES[quantity.kind](state, quantity)


#######################################################################
# Grid Series Provider
#######################################################################
class GridSeries_Provider(SeriesProvider):
    """
    Evaluates norms of the periodic-box solution. Every time point is an
    independent exact propagation from the initial state, so points can be
    evaluated concurrently.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "GridSeries_Provider"
    mode: str = "grid"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        model: ModelSpec,
        initial: Optional[State] = None,
        data_radius: Optional[float] = None,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
        workers: Optional[int] = None,
        **config: Any,
    ) -> None:
        """
        Initialize the grid provider.

        :param model: ModelSpec: The equation parameters.
        :param initial: State: Initial data on the grid.
        :param data_radius: Radius containing the data, used for the wrap time.
        :param instance_id: Unique identifier for this provider instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the provider.
        :param workers: Thread count for time points.
        :param config: Extra configuration (other modes' data is ignored).
        """
        super().__init__(
            instance_id=instance_id,
            logger=logger,
            log_level=log_level,
            workers=workers,
        )
        if initial is None:
            raise ValueError("grid mode needs an initial State")
        self._model = model
        self._initial = initial
        self._data_radius = data_radius
        self._engine = LinearEngine(model, log_level=log_level)

        # Register quantity methods
        self.update_quantity_methods(
            {
                "u_Lm": self._u_norm,
                "ut_Lm": self._ut_norm,
                "grad_Lm": self._grad_norm,
                "energy_Lm": self._energy_norm,
                "hdot": self._hdot_norm,
                "grad2_L2": self._grad2_norm,
            }
        )

    #################################################
    # Helper Methods
    #################################################
    def _state_at(self, t: float) -> State:
        return self._engine.propagate(self._initial, self._initial.time + t)

    #################################################
    # Quantity Methods
    #################################################
    def _u_norm(self, quantity: Quantity, t: float) -> float:
        return _u_value(self._state_at(t), quantity)

    def _ut_norm(self, quantity: Quantity, t: float) -> float:
        return _ut_value(self._state_at(t), quantity)

    def _grad_norm(self, quantity: Quantity, t: float) -> float:
        return _grad_value(self._state_at(t), quantity)

    def _energy_norm(self, quantity: Quantity, t: float) -> float:
        return _energy_value(self._state_at(t), quantity)

    def _hdot_norm(self, quantity: Quantity, t: float) -> float:
        return _hdot_value(self._state_at(t), quantity)

    def _grad2_norm(self, quantity: Quantity, t: float) -> float:
        return _grad2_value(self._state_at(t), quantity)

    #################################################
    # Utility Methods
    #################################################
    def series_metadata(self) -> Dict[str, Any]:
        metadata = super().series_metadata()
        metadata["grid_points"] = self._initial.grid.points_per_axis
        metadata["box_length"] = self._initial.grid.box_length
        if self._data_radius is not None:
            metadata["wrap_time"] = wrap_time(self._initial.grid, self._data_radius)
        return metadata
