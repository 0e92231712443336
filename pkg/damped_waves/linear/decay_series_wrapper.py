#######################################################################
# Project: Damped Waves Module
# File: decay_series_wrapper.py
# Description: Decay-series wrapper over the grid and oracle providers
# Author: AbigailWilliams1692
# Created: 2026-09-17
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
from typing import Any, Optional, Sequence, Tuple, Union

# Local Packages
from damped_waves.kernels import ModelSpec
from damped_waves.linear.grid_series_provider import GridSeries_Provider
from damped_waves.linear.oracle_series_provider import OracleSeries_Provider
from damped_waves.linear.state import RadialProfile, State
from damped_waves.model.series_provider_wrapper import SeriesProvider_Wrapper
from damped_waves.model.time_series import Quantity, TimeSeries


#######################################################################
# Decay Series Wrapper
#######################################################################
class DecaySeries_Wrapper(SeriesProvider_Wrapper):
    """
    Linear decay histories in either "grid" mode (periodic box, any L^m) or
    "oracle" mode (R^n, radial data, L2 quantities).
    """

    _name: str = "DecaySeries_Wrapper"
    _mode_mapping = {
        "grid": GridSeries_Provider,
        "oracle": OracleSeries_Provider,
    }

    def __init__(
        self,
        model: ModelSpec,
        mode: str = "grid",
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
        **config: Any,
    ) -> None:
        """
        Initialize the wrapper.

        :param model: ModelSpec: The equation parameters.
        :param mode: "grid" or "oracle".
        :param config: Provider data: ``initial`` (State) and/or ``v0hat``/``v1hat``
            (RadialProfile), plus ``workers`` and ``data_radius``.
        """
        super().__init__(
            mode=mode,
            mode_mapping=dict(self._mode_mapping),
            instance_id=instance_id,
            logger=logger,
            log_level=log_level,
            model=model,
            **config,
        )


#######################################################################
# Module-level Operation
#######################################################################
def decay_series(
    model: ModelSpec,
    data: Union[State, Tuple[RadialProfile, RadialProfile]],
    times: Sequence[float],
    quantity: Union[str, Quantity],
    mode: Optional[str] = None,
    workers: Optional[int] = None,
) -> TimeSeries:
    """
    Norm of the linear solution at each requested time.

    :param model: ModelSpec: The equation parameters.
    :param data: A grid State (grid mode) or a (v0hat, v1hat) pair (oracle mode).
    :param times: Increasing positive times.
    :param quantity: Quantity or label such as "u_L2", "u_Lm(1.5)", "hdot(0.5)".
    :param mode: "grid" or "oracle"; inferred from the data when None.
    :param workers: Thread count; None reads DAMPED_WAVES_WORKERS.
    :return: TimeSeries: The history tagged with the mode.
    """
    if isinstance(quantity, str):
        quantity = Quantity.parse(quantity)
    times = [float(t) for t in times]
    if any(t <= 0 for t in times) or any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("times must be positive and strictly increasing")
    if isinstance(data, State):
        config: dict = {"initial": data}
        inferred = "grid"
    else:
        v0hat, v1hat = data
        config = {"v0hat": v0hat, "v1hat": v1hat}
        inferred = "oracle"
    wrapper = DecaySeries_Wrapper(model, mode=mode or inferred, workers=workers, **config)
    return wrapper.fetch_series(quantity, times)
